// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/numeric/biguint.hpp"

#include <string>

#include "wsnsec/error.hpp"

namespace wsnsec {

std::size_t bit_length(const BigUint& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

BigUint mod_reduce(const BigUint& v, const BigUint& m) {
  BigUint r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

namespace {

BigUint parse(std::string_view s, int base) {
  if (s.empty()) throw Error(ErrorCode::kMalformedInput, "empty integer");
  for (char c : s) {
    const bool ok = base == 10 ? (c >= '0' && c <= '9')
                               : ((c >= '0' && c <= '9') ||
                                  (c >= 'a' && c <= 'f') ||
                                  (c >= 'A' && c <= 'F'));
    if (!ok) {
      throw Error(ErrorCode::kMalformedInput,
                  "bad digit in integer '" + std::string(s) + "'");
    }
  }
  BigUint v;
  v.set_str(std::string(s), base);
  return v;
}

}  // namespace

BigUint from_dec(std::string_view s) { return parse(s, 10); }
BigUint from_hex(std::string_view s) { return parse(s, 16); }
std::string to_dec(const BigUint& v) { return v.get_str(10); }
std::string to_hex(const BigUint& v) { return v.get_str(16); }

std::uint64_t low_u64(const BigUint& v) {
  std::uint64_t out = 0;
  const mpz_srcptr z = v.get_mpz_t();
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs && i * GMP_NUMB_BITS < 64; ++i) {
    out |= static_cast<std::uint64_t>(mpz_getlimbn(z, i)) << (i * GMP_NUMB_BITS);
  }
  return out;
}

BigUint from_u64(std::uint64_t v) {
  BigUint out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace wsnsec
