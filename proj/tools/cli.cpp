// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "wsnsec/aggregation/benchmark.hpp"
#include "wsnsec/aggregation/pipeline.hpp"
#include "wsnsec/aggregation/topology.hpp"
#include "wsnsec/bgn/cipher.hpp"
#include "wsnsec/bgn/keys.hpp"
#include "wsnsec/error.hpp"
#include "wsnsec/rng.hpp"
#include "wsnsec/watermark/attacks.hpp"
#include "wsnsec/watermark/chaotic.hpp"
#include "wsnsec/watermark/grid.hpp"

#ifndef WSNSEC_VERSION
#define WSNSEC_VERSION "0.0.0"
#endif

namespace wsnsec::cli {
namespace {

namespace agg = wsnsec::aggregation;
namespace wm = wsnsec::watermark;

// Bad paths and unreadable inputs are reported as usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
    throw UsageError("cannot write '" + path + "'");
  }
}

// Writes to `path`, or to `out` when the path is empty or "-".
void emit(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << bytes;
  } else {
    write_file(path, bytes);
  }
}

std::vector<int> parse_levels(const std::string& text) {
  std::vector<int> levels;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    int lo = 0;
    int hi = 0;
    char dash = 0;
    std::istringstream ps(part);
    if (!(ps >> lo)) throw UsageError("bad level list '" + text + "'");
    if (ps >> dash) {
      if (dash != '-' || !(ps >> hi)) throw UsageError("bad level list '" + text + "'");
    } else {
      hi = lo;
    }
    if (lo < 1 || hi > 4 || lo > hi) throw UsageError("levels must lie in 1..4");
    for (int l = lo; l <= hi; ++l) {
      if (std::find(levels.begin(), levels.end(), l) == levels.end()) levels.push_back(l);
    }
  }
  if (levels.empty()) throw UsageError("empty level list");
  return levels;
}

struct KeygenArgs {
  std::size_t tau = 20;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> q1, q2, message_bound, product_bound;
  std::string out_pub, out_priv;
};

struct CipherArgs {
  std::string pub, priv, out;
  std::vector<std::string> in;
  std::uint64_t value = 0;
  std::uint64_t seed = 1;
};

struct SimulateArgs {
  std::size_t sensors = 500;
  std::size_t aggregators = 50;
  std::string pipeline = "sum";
  std::uint64_t seed = 1;
  std::size_t tau = 20;
  std::uint64_t max_reading = 7;
  std::uint64_t max_weight = 3;
  std::string report, topology_in, topology_out;
};

struct BenchArgs {
  std::string levels = "1-4";
  int trials = 20;
  std::uint64_t seed = 1;
  std::size_t sensors = 500;
  std::size_t aggregators = 50;
  int rounds = 200;
  std::optional<double> k;
  std::string report, series;
};

struct WmArgs {
  std::string in, out, mode = "robust", watermark, type;
  std::uint64_t key = 0;
  std::uint64_t seed = 1;
  double param = 0.0;
  std::size_t width = 256, height = 256;
  bool ascii = false;
};

bgn::KeyPair run_keygen_op(const KeygenArgs& a) {
  Rng rng = Rng::derive(a.seed, "keygen");
  bgn::KeygenOptions opts;
  opts.message_bound = a.message_bound;
  opts.product_bound = a.product_bound;
  if (a.q1 || a.q2) {
    if (!a.q1 || !a.q2) throw UsageError("--q1 and --q2 go together");
    return bgn::keygen_from_primes(BigUint(*a.q1), BigUint(*a.q2), rng, opts);
  }
  return bgn::keygen(a.tau, rng, opts);
}

std::string join_header(const std::vector<std::string>& args) {
  std::string h = "wsnsec " WSNSEC_VERSION;
  for (const auto& a : args) h += " " + a;
  return h;
}

std::string simulate_csv(const SimulateArgs& a, const std::string& header) {
  const agg::Pipeline pipeline = agg::parse_pipeline(a.pipeline);
  const agg::Topology topo = a.topology_in.empty()
                                 ? agg::build_topology(a.sensors, a.aggregators, a.seed)
                                 : agg::topology_from_json(read_file(a.topology_in));
  Rng key_rng = Rng::derive(a.seed, "keygen");
  agg::Sink sink(bgn::keygen(a.tau, key_rng));

  Rng reading_rng = Rng::derive(a.seed, "readings");
  std::vector<std::uint64_t> readings(topo.sensors.size());
  for (auto& r : readings) r = reading_rng.below(a.max_reading + 1);
  std::vector<std::uint64_t> weights(topo.aggregators.size());
  for (auto& w : weights) w = 1 + reading_rng.below(a.max_weight);

  Rng run_rng = Rng::derive(a.seed, "pipeline");
  const agg::PipelineResult r = agg::run_pipeline(pipeline, topo, sink, readings, weights, run_rng);

  std::ostringstream os;
  os << "# " << header << "\n";
  os << "pipeline,sensors,aggregators,seed,p_bits,truth_num,truth_den,decrypted_num,"
        "decrypted_den,match,encryptions,additions,multiplications,decryptions,messages\n";
  os << agg::to_string(pipeline) << ',' << topo.sensors.size() << ',' << topo.aggregators.size()
     << ',' << a.seed << ',' << bit_length(sink.public_key().p) << ',' << r.truth.num << ','
     << r.truth.den << ',' << r.decrypted.num << ',' << r.decrypted.den << ','
     << (r.matches() ? "yes" : "no") << ',' << r.ops.encryptions << ',' << r.ops.additions
     << ',' << r.ops.multiplications << ',' << r.ops.decryptions << ',' << r.ops.messages
     << "\n";
  if (!a.topology_out.empty()) write_file(a.topology_out, agg::topology_to_json(topo));
  return os.str();
}

wm::WatermarkConfig wm_config(const WmArgs& a) {
  wm::WatermarkConfig cfg;
  cfg.key = wm::derive_key(a.key);
  cfg.mode = wm::parse_mode(a.mode);
  return cfg;
}

std::vector<bool> wm_bits(const WmArgs& a) {
  return a.watermark.empty() ? wm::default_watermark(a.key)
                             : wm::parse_watermark(read_file(a.watermark));
}

std::string grid_bytes(const wm::SensorGrid& g, bool ascii) {
  return ascii ? wm::save_pgm_ascii(g) : wm::save_pgm(g);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secure aggregation and watermarking for sensor networks", "wsnsec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", WSNSEC_VERSION);
  const std::string header = join_header(args);

  KeygenArgs kg;
  auto* keygen = app.add_subcommand("keygen", "Generate a key pair");
  keygen->add_option("--tau", kg.tau, "Bit size of q1 and q2")->check(CLI::Range(3, 512));
  keygen->add_option("--q1", kg.q1, "Force the first prime");
  keygen->add_option("--q2", kg.q2, "Force the second prime");
  keygen->add_option("--message-bound", kg.message_bound, "Largest level-1 plaintext T");
  keygen->add_option("--product-bound", kg.product_bound, "Largest level-2 plaintext T2");
  keygen->add_option("--seed", kg.seed, "64-bit seed");
  keygen->add_option("--out-pub", kg.out_pub, "Public key JSON")->required();
  keygen->add_option("--out-priv", kg.out_priv, "Private key JSON")->required();

  CipherArgs ca;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt one value");
  encrypt->add_option("--pub", ca.pub, "Public key JSON")->required();
  encrypt->add_option("--value", ca.value, "Plaintext in [0, T]")->required();
  encrypt->add_option("--seed", ca.seed, "64-bit seed");
  encrypt->add_option("--out", ca.out, "Ciphertext file (default stdout)");

  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  decrypt->add_option("--pub", ca.pub, "Public key JSON")->required();
  decrypt->add_option("--priv", ca.priv, "Private key JSON")->required();
  decrypt->add_option("--in", ca.in, "Ciphertext file")->required()->expected(1);

  auto* add = app.add_subcommand("add", "Homomorphic sum of ciphertext files");
  add->add_option("--pub", ca.pub, "Public key JSON")->required();
  add->add_option("--in", ca.in, "Ciphertext files")->required()->expected(2, 1 << 20);
  add->add_option("--seed", ca.seed, "64-bit seed");
  add->add_option("--out", ca.out, "Ciphertext file (default stdout)");

  auto* mul = app.add_subcommand("mul", "Homomorphic product of two level-1 ciphertexts");
  mul->add_option("--pub", ca.pub, "Public key JSON")->required();
  mul->add_option("--in", ca.in, "Two ciphertext files")->required()->expected(2);
  mul->add_option("--seed", ca.seed, "64-bit seed");
  mul->add_option("--out", ca.out, "Ciphertext file (default stdout)");

  SimulateArgs sa;
  auto* simulate = app.add_subcommand("simulate", "Run one aggregation pipeline over a topology");
  simulate->add_option("--sensors", sa.sensors)->check(CLI::Range(1, 1000000));
  simulate->add_option("--aggregators", sa.aggregators)->check(CLI::Range(1, 100000));
  simulate->add_option("--pipeline", sa.pipeline)
      ->check(CLI::IsMember({"sum", "mean", "variance", "wmean"}));
  simulate->add_option("--seed", sa.seed, "64-bit seed");
  simulate->add_option("--tau", sa.tau, "Bit size of q1 and q2")->check(CLI::Range(3, 512));
  simulate->add_option("--max-reading", sa.max_reading, "Readings drawn from [0, R]");
  simulate->add_option("--max-weight", sa.max_weight, "wmean weights drawn from [1, W]")
      ->check(CLI::Range(1, 1 << 16));
  simulate->add_option("--topology-in", sa.topology_in, "Load topology JSON");
  simulate->add_option("--topology-out", sa.topology_out, "Dump topology JSON");
  simulate->add_option("--report", sa.report, "CSV report (default stdout)");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "EC vs RSA energy benchmark");
  bench->add_option("--levels", ba.levels, "e.g. 1-4 or 1,3");
  bench->add_option("--trials", ba.trials)->check(CLI::Range(1, 100000));
  bench->add_option("--seed", ba.seed, "64-bit seed");
  bench->add_option("--sensors", ba.sensors)->check(CLI::Range(1, 1000000));
  bench->add_option("--aggregators", ba.aggregators)->check(CLI::Range(1, 100000));
  bench->add_option("--rounds", ba.rounds, "Depletion rounds, 0 disables")
      ->check(CLI::Range(0, 1000000));
  bench->add_option("--k", ba.k, "Energy per second (default: calibrated)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--report", ba.report, "CSV report (default stdout)");
  bench->add_option("--series", ba.series, "Battery depletion series CSV");

  WmArgs wa;
  auto* wmc = app.add_subcommand("wm", "Chaotic-iterations watermarking");
  wmc->require_subcommand(1);
  auto add_wm_common = [&](CLI::App* c) {
    c->add_option("--in", wa.in, "Input PGM")->required();
    c->add_option("--key", wa.key, "64-bit watermark key")->required();
    c->add_option("--mode", wa.mode)->check(CLI::IsMember({"auth", "robust"}));
    c->add_option("--watermark", wa.watermark, "Bit string file (default: key-derived)");
  };
  auto* embed = wmc->add_subcommand("embed", "Embed a watermark");
  add_wm_common(embed);
  embed->add_option("--out", wa.out, "Output PGM")->required();
  embed->add_flag("--ascii", wa.ascii, "Write P2 instead of P5");
  auto* check = wmc->add_subcommand("check", "Print similarity with the expected watermark");
  add_wm_common(check);
  auto* attack = wmc->add_subcommand("attack", "Apply an attack to a grid");
  attack->add_option("--in", wa.in, "Input PGM")->required();
  attack->add_option("--out", wa.out, "Output PGM")->required();
  attack->add_option("--type", wa.type)
      ->required()
      ->check(CLI::IsMember({"zero", "rotate", "noise", "jpeg"}));
  attack->add_option("--param", wa.param, "Block side, degrees, sigma or level")->required();
  attack->add_option("--seed", wa.seed, "Noise seed");
  attack->add_flag("--ascii", wa.ascii, "Write P2 instead of P5");
  auto* random = wmc->add_subcommand("random", "Write a uniform random grid");
  random->add_option("--width", wa.width)->check(CLI::Range(1, 1 << 15));
  random->add_option("--height", wa.height)->check(CLI::Range(1, 1 << 15));
  random->add_option("--seed", wa.seed, "64-bit seed");
  random->add_option("--out", wa.out, "Output PGM")->required();
  random->add_flag("--ascii", wa.ascii, "Write P2 instead of P5");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << WSNSEC_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "wsnsec: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*keygen) {
      const bgn::KeyPair kp = run_keygen_op(kg);
      write_file(kg.out_pub, bgn::public_key_to_json(kp.pub));
      write_file(kg.out_priv, bgn::private_key_to_json(kp.priv));
      out << "p_bits=" << bit_length(kp.pub.p) << " n=" << to_dec(kp.pub.n)
          << " T=" << kp.pub.message_bound << " T2=" << kp.pub.product_bound << "\n";
    } else if (*encrypt) {
      const bgn::PublicKey pk = bgn::public_key_from_json(read_file(ca.pub));
      Rng rng = Rng::derive(ca.seed, "encrypt");
      emit(ca.out, bgn::to_wire(bgn::encrypt(pk, ca.value, rng)) + "\n", out);
    } else if (*decrypt) {
      const bgn::PublicKey pk = bgn::public_key_from_json(read_file(ca.pub));
      const bgn::PrivateKey sk = bgn::private_key_from_json(read_file(ca.priv));
      const bgn::Ciphertext c = bgn::from_wire(read_file(ca.in[0]), pk);
      const std::uint64_t m = c.level() == bgn::Level::kOne ? bgn::decrypt(pk, sk, c)
                                                            : bgn::decrypt_product(pk, sk, c);
      out << m << "\n";
    } else if (*add) {
      const bgn::PublicKey pk = bgn::public_key_from_json(read_file(ca.pub));
      const bgn::PairingContext ctx(pk);
      Rng rng = Rng::derive(ca.seed, "add");
      bgn::BgnOptions opts;
      opts.level2_addition = true;
      bgn::Ciphertext acc = bgn::from_wire(read_file(ca.in[0]), pk);
      for (std::size_t i = 1; i < ca.in.size(); ++i) {
        acc = bgn::hom_add(ctx, acc, bgn::from_wire(read_file(ca.in[i]), pk), rng, opts);
      }
      emit(ca.out, bgn::to_wire(acc) + "\n", out);
    } else if (*mul) {
      const bgn::PublicKey pk = bgn::public_key_from_json(read_file(ca.pub));
      const bgn::PairingContext ctx(pk);
      Rng rng = Rng::derive(ca.seed, "mul");
      const bgn::Ciphertext c = bgn::hom_mul(ctx, bgn::from_wire(read_file(ca.in[0]), pk),
                                             bgn::from_wire(read_file(ca.in[1]), pk), rng);
      emit(ca.out, bgn::to_wire(c) + "\n", out);
    } else if (*simulate) {
      emit(sa.report, simulate_csv(sa, header), out);
    } else if (*bench) {
      agg::BenchmarkOptions opts;
      opts.levels = parse_levels(ba.levels);
      opts.trials = ba.trials;
      opts.seed = ba.seed;
      opts.sensors = ba.sensors;
      opts.aggregators = ba.aggregators;
      opts.rounds = ba.series.empty() ? 0 : ba.rounds;
      opts.model.k = ba.k;
      const agg::SimReport report = agg::run_benchmark(opts);
      std::ostringstream rs;
      agg::write_report_csv(rs, report, header);
      emit(ba.report, rs.str(), out);
      if (!ba.series.empty()) {
        std::ostringstream ss;
        agg::write_series_csv(ss, report, header);
        write_file(ba.series, ss.str());
      }
    } else if (*embed) {
      const wm::SensorGrid g = wm::load_pgm(read_file(wa.in));
      write_file(wa.out, grid_bytes(wm::embed_watermark(g, wm_config(wa), wm_bits(wa)), wa.ascii));
    } else if (*check) {
      const wm::SensorGrid g = wm::load_pgm(read_file(wa.in));
      out << wm::extract_similarity(g, wm_config(wa), wm_bits(wa)).str() << "\n";
    } else if (*attack) {
      const wm::SensorGrid g = wm::load_pgm(read_file(wa.in));
      wm::SensorGrid r;
      if (wa.type == "zero") {
        if (wa.param < 0) throw UsageError("zeroing side must be non-negative");
        r = wm::attack_zeroing(g, static_cast<std::size_t>(wa.param));
      } else if (wa.type == "rotate") {
        r = wm::attack_rotation(g, wa.param);
      } else if (wa.type == "noise") {
        r = wm::attack_gaussian(g, wa.param, wa.seed);
      } else {
        r = wm::attack_jpeg(g, wa.param);
      }
      write_file(wa.out, grid_bytes(r, wa.ascii));
    } else if (*random) {
      Rng rng = Rng::derive(wa.seed, "grid");
      write_file(wa.out, grid_bytes(wm::random_grid(wa.width, wa.height, rng), wa.ascii));
    }
  } catch (const UsageError& e) {
    err << "wsnsec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "wsnsec: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace wsnsec::cli
