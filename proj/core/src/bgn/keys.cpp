// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/bgn/keys.hpp"

#include "json.hpp"
#include "wsnsec/error.hpp"
#include "wsnsec/numeric/modular.hpp"

namespace wsnsec::bgn {

using nlohmann::json;

std::vector<BigUint> small_prime_factors(BigUint v, std::uint64_t limit) {
  std::vector<BigUint> out;
  for (std::uint64_t d = 2; d <= limit && BigUint(d) * d <= v; ++d) {
    if (mpz_divisible_ui_p(v.get_mpz_t(), d)) {
      out.emplace_back(static_cast<unsigned long>(d));
      while (mpz_divisible_ui_p(v.get_mpz_t(), d)) v /= static_cast<unsigned long>(d);
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

bool has_exact_order(const CurvePoint& p, const BigUint& order,
                     const std::vector<BigUint>& prime_factors, const CurveParams& curve) {
  const auto group = curve_group(curve);
  if (!group.mul(order, p).is_infinity()) return false;
  for (const BigUint& q : prime_factors) {
    if (group.mul(order / q, p).is_infinity()) return false;
  }
  return true;
}

namespace {

std::uint64_t pick_bound(const std::optional<std::uint64_t>& requested, const BigUint& q2,
                         const char* what) {
  const BigUint limit = q2 - 1;
  if (requested) {
    if (BigUint(static_cast<unsigned long>(*requested)) > limit) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " must be below q2 = " + to_dec(q2));
    }
    return *requested;
  }
  if (limit < kDefaultMessageBound) return limit.get_ui();
  return kDefaultMessageBound;
}

// Smallest l in [1, max_cofactor] with l n - 1 prime and = 11 mod 12.
std::optional<BigUint> find_cofactor(const BigUint& n, std::uint64_t max_cofactor) {
  for (std::uint64_t l = 1; l <= max_cofactor; ++l) {
    const BigUint p = BigUint(static_cast<unsigned long>(l)) * n - 1;
    if (p < 3) continue;
    if (mod_reduce(p, 3) != 2 || mod_reduce(p, 4) != 3) continue;
    if (is_prime(p)) return BigUint(static_cast<unsigned long>(l));
  }
  return std::nullopt;
}

CurvePoint random_point_of_order(const CurvePoint& base, const BigUint& order,
                                 const std::vector<BigUint>& factors,
                                 const CurveParams& curve, Rng& rng) {
  const auto group = curve_group(curve);
  for (int tries = 0; tries < 4096; ++tries) {
    const CurvePoint y = group.mul(rng.below(order), base);
    if (has_exact_order(y, order, factors, curve)) return y;
  }
  throw Error(ErrorCode::kGenerationFailure, "no element of order n found");
}

}  // namespace

KeyPair keygen_from_primes(const BigUint& q1, const BigUint& q2, Rng& rng,
                           const KeygenOptions& options) {
  if (q1 == q2 || !is_prime(q1) || !is_prime(q2)) {
    throw Error(ErrorCode::kInvalidArgument, "q1 and q2 must be distinct primes");
  }
  const BigUint n = q1 * q2;
  const auto l = find_cofactor(n, options.max_cofactor);
  if (!l) {
    throw Error(ErrorCode::kGenerationFailure,
                "no cofactor l <= " + std::to_string(options.max_cofactor));
  }
  const BigUint p = *l * n - 1;
  const CurveParams curve = supersingular_curve(p);

  // E(F_p) is cyclic of order p + 1 = l n; find a generator X.
  std::vector<BigUint> full_factors = small_prime_factors(*l);
  full_factors.push_back(q1);
  full_factors.push_back(q2);
  const BigUint group_order = p + 1;
  CurvePoint x;
  bool found = false;
  for (int tries = 0; tries < 4096 && !found; ++tries) {
    x = random_point(curve, rng);
    found = has_exact_order(x, group_order, full_factors, curve);
  }
  if (!found) throw Error(ErrorCode::kGenerationFailure, "no point of order p + 1 found");

  const CurvePoint base = scalar_mul(*l, x, curve);
  const std::vector<BigUint> n_factors{q1, q2};
  const CurvePoint g = random_point_of_order(base, n, n_factors, curve, rng);
  const CurvePoint u = random_point_of_order(base, n, n_factors, curve, rng);

  KeyPair out;
  out.pub.n = n;
  out.pub.p = p;
  out.pub.l = *l;
  out.pub.curve = curve;
  out.pub.g = g;
  out.pub.h = scalar_mul(q2, u, curve);
  out.pub.message_bound = pick_bound(options.message_bound, q2, "message bound");
  out.pub.product_bound = pick_bound(options.product_bound, q2, "product bound");
  out.priv.q1 = q1;
  return out;
}

KeyPair keygen(std::size_t tau, Rng& rng, const KeygenOptions& options) {
  if (tau < 2) throw Error(ErrorCode::kInvalidArgument, "tau must be >= 2");
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    const BigUint q1 = gen_prime(tau, rng);
    BigUint q2 = gen_prime(tau, rng);
    for (int redraw = 0; q2 == q1 && redraw < 64; ++redraw) q2 = gen_prime(tau, rng);
    if (q1 == q2) continue;
    try {
      return keygen_from_primes(q1, q2, rng, options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kGenerationFailure) throw;
    }
  }
  throw Error(ErrorCode::kGenerationFailure,
              "key generation failed after " + std::to_string(options.max_attempts) +
                  " prime pairs");
}

void validate(const PublicKey& pk) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::kInvalidArgument, why); };
  if (pk.l < 1 || pk.n < 2) fail("l and n must be positive");
  if (pk.p != pk.l * pk.n - 1) fail("p != l n - 1");
  if (!is_prime(pk.p)) fail("p is not prime");
  if (mod_reduce(pk.p, 3) != 2) fail("p != 2 mod 3");
  if (pk.curve != supersingular_curve(pk.p)) fail("curve must be y^2 = x^3 + 1 over F_p");
  if (!on_curve(pk.g, pk.curve) || !on_curve(pk.h, pk.curve)) fail("generator off curve");
  if (pk.g.is_infinity()) fail("g is the identity");
  if (!scalar_mul(pk.n, pk.g, pk.curve).is_infinity()) fail("n g != O");
  if (!scalar_mul(pk.n, pk.h, pk.curve).is_infinity()) fail("n h != O");
  if (BigUint(static_cast<unsigned long>(pk.message_bound)) >= pk.n ||
      BigUint(static_cast<unsigned long>(pk.product_bound)) >= pk.n) {
    fail("message bounds must be below n");
  }
}

std::string public_key_to_json(const PublicKey& pk) {
  json j;
  j["n"] = to_dec(pk.n);
  j["p"] = to_dec(pk.p);
  j["l"] = to_dec(pk.l);
  j["g"] = point_to_hex(pk.g);
  j["h"] = point_to_hex(pk.h);
  j["curve"] = {{"a", to_dec(pk.curve.a)}, {"b", to_dec(pk.curve.b)}};
  j["t"] = std::to_string(pk.message_bound);
  j["t2"] = std::to_string(pk.product_bound);
  return j.dump(2) + "\n";
}

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
}

std::string field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw Error(ErrorCode::kMalformedInput, std::string("missing string field '") + key + "'");
  }
  return j[key].get<std::string>();
}

std::uint64_t bound_field(const json& j, const char* key) {
  if (!j.contains(key)) return kDefaultMessageBound;
  const BigUint v = from_dec(field(j, key));
  if (bit_length(v) > 63) throw Error(ErrorCode::kMalformedInput, "bound too large");
  return static_cast<std::uint64_t>(low_u64(v));
}

}  // namespace

PublicKey public_key_from_json(const std::string& text) {
  const json j = parse_json(text);
  PublicKey pk;
  pk.n = from_dec(field(j, "n"));
  pk.p = from_dec(field(j, "p"));
  pk.l = from_dec(field(j, "l"));
  if (!j.contains("curve") || !j["curve"].is_object()) {
    throw Error(ErrorCode::kMalformedInput, "missing curve object");
  }
  pk.curve = CurveParams{pk.p, from_dec(field(j["curve"], "a")), from_dec(field(j["curve"], "b"))};
  pk.g = point_from_hex(field(j, "g"), pk.curve);
  pk.h = point_from_hex(field(j, "h"), pk.curve);
  pk.message_bound = bound_field(j, "t");
  pk.product_bound = bound_field(j, "t2");
  validate(pk);
  return pk;
}

std::string private_key_to_json(const PrivateKey& sk) {
  json j;
  j["q1"] = to_dec(sk.q1);
  return j.dump(2) + "\n";
}

PrivateKey private_key_from_json(const std::string& text) {
  const json j = parse_json(text);
  PrivateKey sk{from_dec(field(j, "q1"))};
  if (sk.q1 < 2) throw Error(ErrorCode::kMalformedInput, "q1 must be a prime");
  return sk;
}

}  // namespace wsnsec::bgn
