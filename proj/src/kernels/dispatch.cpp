// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The tpbsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tpb/kernels.hpp"

namespace tpb::kernels {

bool supported(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(TPB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

const Table& table(Isa isa) noexcept {
#ifdef TPB_HAVE_AVX2
    if (isa == Isa::avx2 && supported(Isa::avx2)) return avx2_table();
#else
    (void)isa;
#endif
    return scalar_table();
}

const Table& active() noexcept {
    static const Table& chosen = table(supported(Isa::avx2) ? Isa::avx2 : Isa::scalar);
    return chosen;
}

std::string_view name(Isa isa) noexcept {
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

} // namespace tpb::kernels
