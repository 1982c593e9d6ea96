// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace wsnsec {

// Arbitrary-precision non-negative integer. Backed by GMP; the library never
// stores negative values in a BigUint outside of local temporaries.
using BigUint = mpz_class;

std::size_t bit_length(const BigUint& v);

// Canonical residue in [0, m), also for negative temporaries.
BigUint mod_reduce(const BigUint& v, const BigUint& m);

BigUint from_dec(std::string_view s);
BigUint from_hex(std::string_view s);
std::string to_dec(const BigUint& v);
std::string to_hex(const BigUint& v);  // lowercase, no prefix

std::uint64_t low_u64(const BigUint& v);
BigUint from_u64(std::uint64_t v);

}  // namespace wsnsec
