// Copyright 2026 The qkc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace qkc::kernels {

using cplx = std::complex<double>;

/// Structure-of-arrays storage for a list of 2x2 complex matrices.
/// Used by the nearest-neighbour search over the Solovay-Kitaev net;
/// arrays are padded to a multiple of 4 entries (padding scores to 0).
struct MatrixSoA {
    std::vector<double> re00, im00, re01, im01, re10, im10, re11, im11;
    std::size_t count = 0;  // real entries, excluding padding

    void push(const cplx m[4]);
    void finalize();  // pad to a multiple of 4
};

struct NnResult {
    std::size_t index;
    double abs_trace_sq;  // |tr(Q^dag E)|^2 of the best entry
};

// All kernels operate on interleaved complex<double> amplitude arrays of
// length n = 2^num_qubits. Bit positions are counted from the least
// significant bit of the basis-state index.

/// y <- M y on the target qubit: for every index pair (i, i+stride) with
/// the stride bit clear in i, (a,b) -> (m00 a + m01 b, m10 a + m11 b).
using Apply1QFn = void (*)(cplx* amps, std::size_t n, std::size_t stride,
                           const cplx m[4]);

/// Controlled-X: swap amps[i] <-> amps[i + tstride] for every i with the
/// control bit set and the target bit clear.
using ApplyCxFn = void (*)(cplx* amps, std::size_t n, std::size_t cstride,
                           std::size_t tstride);

/// sum_i conj(a_i) b_i
using InnerProductFn = cplx (*)(const cplx* a, const cplx* b, std::size_t n);

/// sum_i |a_i|^2
using SquaredNormFn = double (*)(const cplx* a, std::size_t n);

/// argmax over the net of |tr(Q^dag E_k)|^2 (ties: lowest index wins in the
/// scalar kernel; any maximising index is acceptable).
using NnBestFn = NnResult (*)(const MatrixSoA& net, const cplx q[4]);

struct Table {
    Apply1QFn apply_1q;
    ApplyCxFn apply_cx;
    InnerProductFn inner_product;
    SquaredNormFn squared_norm;
    NnBestFn nn_best;
    const char* name;
};

/// Scalar reference kernels (always available).
const Table& scalar_table();

/// AVX2 kernels, or nullptr when the binary or CPU lacks support.
const Table* avx2_table();

/// The table selected at startup: AVX2 when available, unless the
/// environment variable QKC_KERNELS forces "scalar" or "avx2".
const Table& active();

/// Name of the active variant ("scalar" or "avx2").
std::string active_name();

}  // namespace qkc::kernels
