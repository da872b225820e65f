#include "delcode/cli.hpp"

#include <bit>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "delcode/adversarial.hpp"
#include "delcode/analysis.hpp"
#include "delcode/bitseq.hpp"
#include "delcode/channels.hpp"
#include "delcode/descriptor.hpp"
#include "delcode/oblivious.hpp"

namespace delcode {

namespace {

int ceil_log2(std::uint64_t count) {
  return count <= 1 ? 0 : std::bit_width(count - 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

std::string read_line_token(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("expected a line on stdin");
  // Trim surrounding whitespace.
  const auto a = line.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) throw std::invalid_argument("expected a nonempty line on stdin");
  const auto b = line.find_last_not_of(" \t\r\n");
  return line.substr(a, b - a + 1);
}

BitString read_word(std::istream& in, const std::string& in_path) {
  if (!in_path.empty()) {
    std::ifstream f(in_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + in_path);
    return read_framed(f);
  }
  return BitString::parse(read_line_token(in));
}

void emit_word(const BitString& w, std::ostream& out, const std::string& out_path) {
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + out_path);
    write_framed(f, w);
    return;
  }
  out << w.str() << '\n';
}

// Streams the CSV either to --out or to stdout.
template <typename WriteFn>
void emit_csv(const std::string& out_path, std::ostream& out, WriteFn&& write) {
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + out_path);
    write(f);
    if (!f) throw std::runtime_error("write failed: " + out_path);
  } else {
    write(out);
  }
}

// --- adversarial full-code plumbing ------------------------------------------
// The library exposes the adversarial scheme in hash-transmission form; the
// CLI carries the tag inside the codeword the same way the systematic
// oblivious wrapper does: m followed by Rep_{t+1}(index, residue).

BitString adv_pack_tag(const AdversarialDescriptor& d, const HashTag& tag) {
  const int idx_bits = ceil_log2(d.sampled.primes.size());
  const int res_bits = ceil_log2(static_cast<std::uint64_t>(d.m_bound));
  BitString bits;
  for (int i = idx_bits - 1; i >= 0; --i) {
    bits.push_back(static_cast<std::uint8_t>((tag.prime_index >> i) & 1));
  }
  for (int i = res_bits - 1; i >= 0; --i) {
    bits.push_back(static_cast<std::uint8_t>((tag.residue >> i) & 1));
  }
  return bits;
}

HashTag adv_unpack_tag(const AdversarialDescriptor& d, const BitString& bits) {
  const int idx_bits = ceil_log2(d.sampled.primes.size());
  const int res_bits = ceil_log2(static_cast<std::uint64_t>(d.m_bound));
  if (bits.size() != idx_bits + res_bits) {
    throw std::runtime_error("adversarial tag has the wrong width");
  }
  HashTag tag;
  tag.prime_index = 0;  // the default is the "no index" sentinel -1
  for (int i = 1; i <= idx_bits; ++i) tag.prime_index = tag.prime_index * 2 + bits.at(i);
  for (int i = idx_bits + 1; i <= bits.size(); ++i) tag.residue = tag.residue * 2 + bits.at(i);
  if (tag.prime_index >= static_cast<std::int64_t>(d.sampled.primes.size())) {
    throw std::runtime_error("adversarial tag names a prime index out of range");
  }
  tag.prime_value = d.sampled.primes[static_cast<std::size_t>(tag.prime_index)];
  return tag;
}

BitString adv_encode_full(const AdversarialDescriptor& d, const BitString& m) {
  BitString c = m;
  c.append(rep_encode(adv_pack_tag(d, adversarial_encode_hash(d, m)), d.params.t + 1));
  return c;
}

BitString adv_decode_full(const AdversarialDescriptor& d, const BitString& z) {
  const int t = d.params.t;
  const int tag_w = adversarial_tag_width_bits(d);
  const int rep_len = (t + 1) * tag_w;
  const int full = d.params.n + rep_len;
  if (z.size() < full - t) throw std::runtime_error("received word too short");
  const BitString zz = z.size() > full - t ? z.prefix(full - t) : z;
  const BitString z0 = zz.prefix(d.params.n - t);
  const BitString z1 = zz.suffix(rep_len - t);
  const BitString tag_bits = rep_decode(z1, t + 1);
  if (tag_bits.size() != tag_w) throw std::runtime_error("tag block failed to decode");
  return adversarial_decode(d, z0, adv_unpack_tag(d, tag_bits));
}

// --- grid parsing -------------------------------------------------------------

GridSpec parse_grid(const std::string& messages, const std::string& patterns, bool sampler) {
  GridSpec grid;
  if (!messages.empty()) {
    for (const std::string& tok : split(messages, ';')) {
      if (sampler) {
        // Sampler messages are indices; the library sweeps all survivors,
        // so restriction is not supported there.
        throw std::invalid_argument("--messages is not supported for the sampler scheme");
      }
      grid.messages.push_back(BitString::parse(tok));
    }
  }
  if (!patterns.empty()) {
    for (const std::string& tok : split(patterns, ';')) {
      grid.patterns.push_back(DeletionPattern::parse(tok));
    }
  }
  return grid;
}

struct VerifyFlags {
  std::string descriptor_path;
  std::string channel = "oblivious-exhaustive";
  int trials = 0;
  double p = 0.0;
  std::uint64_t channel_seed = 0;
  std::string messages;
  std::string patterns;
  std::string grid = "all";
  bool systematic = false;
  bool serial = false;
  std::string out_path;
};

int run_verify(const VerifyFlags& fl, std::ostream& out, std::ostream& err) {
  if (fl.grid == "none") {
    // Nothing to check: empty CSV (header only), success.
    FailureReport empty;
    emit_csv(fl.out_path, out, [&](std::ostream& os) { write_failure_csv(empty, os); });
    return 0;
  }
  if (fl.grid != "all") throw std::invalid_argument("--grid must be \"all\" or \"none\"");

  ChannelModelSpec channel;
  channel.kind = parse_channel_model(fl.channel);
  channel.p = fl.p;
  channel.seed = fl.channel_seed;
  channel.trials = fl.trials;
  const Parallelism par = fl.serial ? Parallelism::serial : Parallelism::openmp;

  const std::string text = read_text_file(fl.descriptor_path);
  FailureReport rep;
  if (peek_descriptor_kind(text) == DescriptorKind::adversarial) {
    const AdversarialDescriptor d = load_adversarial_descriptor(text);
    rep = worst_case_report(d, channel, parse_grid(fl.messages, fl.patterns, false), par);
  } else {
    const ObliviousDescriptor d = load_oblivious_descriptor(text);
    const GridSpec grid =
        parse_grid(fl.messages, fl.patterns, d.scheme == ObliviousScheme::existential);
    if (fl.systematic) {
      rep = systematic_report(d, channel, grid, par);
    } else {
      rep = worst_case_report(d, channel, grid, par);
    }
  }
  emit_csv(fl.out_path, out, [&](std::ostream& os) { write_failure_csv(rep, os); });
  if (rep.violations > 0) {
    err << "contract violation (" << rep.violations << " grid points over the bound); first: "
        << rep.first_violation << ", worst failure " << ratio_str(rep.worst) << "\n";
    return 1;
  }
  return 0;
}

InnerHashSpec pick_inner(const std::string& choice, int len, int t, std::uint64_t budget) {
  if (choice == "vt" || (choice == "auto" && t == 1)) {
    if (t != 1) throw std::invalid_argument("the syndrome hash handles exactly one deletion");
    return make_vt_spec(len);
  }
  if (choice == "greedy" || choice == "auto") return build_greedy_coloring(len, t, budget);
  throw std::invalid_argument("--inner must be auto, vt, or greedy");
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"deletion-code toolkit: build/encode/corrupt/decode/verify/analyze/report"};
  app.require_subcommand(1);

  // ---- build ----
  auto* build = app.add_subcommand("build", "build a code descriptor and write it as JSON");
  std::string b_scheme;
  int b_n = 0, b_t = 0, b_list_size = 4, b_s = 0, b_codebook = 0;
  std::string b_eps = "1/4", b_inner = "auto", b_out;
  std::uint64_t b_seed = 0;
  std::int64_t b_forced_m = 0;
  bool b_no_verify = false;
  build->add_option("--scheme", b_scheme,
                    "explicit | randomized | list-wrapped | existential | adversarial")
      ->required();
  build->add_option("--n", b_n, "message length in bits")->required();
  build->add_option("--t", b_t, "deletion budget")->required();
  build->add_option("--eps", b_eps, "failure bound as a fraction, e.g. 1/4");
  build->add_option("--seed", b_seed, "build seed (randomized/existential/adversarial)");
  build->add_option("--inner", b_inner, "inner hash: auto | vt | greedy");
  build->add_option("--forced-m", b_forced_m,
                    "diagnostic: pin the modulus cap, skipping the failure-bound guard "
                    "(explicit scheme only)");
  build->add_option("--list-size", b_list_size, "list size L (list-wrapped)");
  build->add_option("--s", b_s, "sampler multiset size (existential)");
  build->add_option("--codebook-size", b_codebook, "sampler message count (existential)");
  build->add_flag("--no-verify", b_no_verify,
                  "skip exhaustive build verification (randomized/adversarial)");
  build->add_option("--out", b_out, "descriptor file (default: stdout)");

  // ---- encode ----
  auto* encode = app.add_subcommand("encode", "read a message, write the full codeword");
  std::string e_desc, e_in, e_out;
  std::uint64_t e_seed = 0;
  encode->add_option("--descriptor", e_desc, "descriptor JSON file")->required();
  encode->add_option("--seed", e_seed, "encoder coin seed");
  encode->add_option("--in", e_in, "framed binary input (default: ASCII line on stdin)");
  encode->add_option("--out", e_out, "framed binary output (default: ASCII line on stdout)");

  // ---- corrupt ----
  auto* corrupt_cmd = app.add_subcommand("corrupt", "apply a deletion channel to a word");
  std::string c_channel, c_in, c_out;
  std::uint64_t c_trial = 0;
  corrupt_cmd
      ->add_option("--channel", c_channel,
                   "oblivious:<n>:<s1>,<s2>,...:<seed> | uniform:<n>:<t>:<seed> | "
                   "iid:<n>:<p>:<seed>")
      ->required();
  corrupt_cmd->add_option("--trial", c_trial, "invocation index for stochastic channels");
  corrupt_cmd->add_option("--in", c_in, "framed binary input (default: ASCII line on stdin)");
  corrupt_cmd->add_option("--out", c_out, "framed binary output (default: ASCII line)");

  // ---- decode ----
  auto* decode = app.add_subcommand("decode", "decode a corrupted word");
  std::string d_desc, d_in, d_out;
  decode->add_option("--descriptor", d_desc, "descriptor JSON file")->required();
  decode->add_option("--in", d_in, "framed binary input (default: ASCII line on stdin)");
  decode->add_option("--out", d_out, "framed binary output (default: ASCII line)");

  // ---- verify ----
  auto* verify = app.add_subcommand(
      "verify", "exhaustive (or sampled) failure sweep; exit 1 on any contract violation");
  VerifyFlags vf;
  verify->add_option("--descriptor", vf.descriptor_path, "descriptor JSON file")->required();
  verify->add_option("--channel", vf.channel,
                     "oblivious-exhaustive | adversarial-worst-case | uniform-random-t | "
                     "iid-deletion");
  verify->add_option("--trials", vf.trials, "trial count for sampled channel models");
  verify->add_option("--p", vf.p, "per-bit deletion probability (iid-deletion)");
  verify->add_option("--channel-seed", vf.channel_seed, "seed for sampled channel models");
  verify->add_option("--messages", vf.messages, "semicolon-separated message restriction");
  verify->add_option("--patterns", vf.patterns, "semicolon-separated pattern restriction");
  verify->add_option("--grid", vf.grid, "all | none");
  verify->add_flag("--systematic", vf.systematic,
                   "sweep the systematic wrapper instead of the hash-transmission form");
  verify->add_flag("--serial", vf.serial, "use the serial reference sweep");
  verify->add_option("--out", vf.out_path, "CSV file (default: stdout)");

  // ---- analyze ----
  auto* analyze = app.add_subcommand("analyze", "counting, bounds, and the reduction");
  analyze->require_subcommand(1);

  auto* census = analyze->add_subcommand(
      "census", "count strings on which two far-apart patterns collide");
  int ce_n = 0, ce_ell = 0, ce_t = 0;
  bool ce_serial = false;
  std::string ce_out;
  census->add_option("--n", ce_n, "string length")->required();
  census->add_option("--ell", ce_ell, "pattern-distance threshold")->required();
  census->add_option("--t", ce_t, "deletions per pattern")->required();
  census->add_flag("--serial", ce_serial, "use the serial reference scan");
  census->add_option("--out", ce_out, "CSV file (default: stdout)");

  auto* closep = analyze->add_subcommand(
      "close-patterns", "count patterns within a distance radius of a given one");
  std::string cp_tau, cp_out;
  int cp_ell = 0;
  closep->add_option("--tau", cp_tau, "pattern, e.g. 10:1,2,5,6,7,8,9,10")->required();
  closep->add_option("--ell", cp_ell, "distance radius")->required();
  closep->add_option("--out", cp_out, "CSV file (default: stdout)");

  auto* lower = analyze->add_subcommand("lower-bound", "evaluable converse-bound value");
  int lb_n = 0, lb_t = 0;
  std::string lb_eps = "1/4", lb_out;
  lower->add_option("--n", lb_n, "message length")->required();
  lower->add_option("--t", lb_t, "deletion budget")->required();
  lower->add_option("--eps", lb_eps, "failure bound fraction");
  lower->add_option("--out", lb_out, "CSV file (default: stdout)");

  auto* reduction = analyze->add_subcommand(
      "reduction", "sampled deterministic code: exact average error per seed");
  std::string rd_desc, rd_out;
  std::uint64_t rd_seed = 0;
  int rd_seeds = 1;
  reduction->add_option("--descriptor", rd_desc, "descriptor JSON file")->required();
  reduction->add_option("--seed", rd_seed, "first sampling seed");
  reduction->add_option("--seeds", rd_seeds, "number of consecutive seeds");
  reduction->add_option("--out", rd_out, "CSV file (default: stdout)");

  auto* gap = analyze->add_subcommand(
      "gap", "worst failure with the modulus guard bypassed vs the deterministic scheme");
  std::uint64_t gp_seed = 0;
  std::string gp_out;
  gap->add_option("--seed", gp_seed, "build seed for the deterministic side");
  gap->add_option("--out", gp_out, "CSV file (default: stdout)");

  // ---- report ----
  auto* report = app.add_subcommand("report", "summary tables");
  report->require_subcommand(1);
  auto* redundancy = report->add_subcommand(
      "redundancy", "measured redundancy vs leading-order formulas");
  std::string rr_points =
      "vt:8:1:1/4;vt:10:1:1/4;vt:12:1:1/4;"
      "explicit:8:1:1/4;explicit:10:1:1/4;explicit:12:1:1/4;"
      "explicit:8:2:1/4;explicit:10:2:1/4;explicit:12:2:1/4;"
      "randomized:8:1:1/4;randomized:10:1:1/4;randomized:12:1:1/4;"
      "randomized:8:2:1/4;randomized:10:2:1/4;randomized:12:2:1/4;"
      "adversarial:8:1:1/4;adversarial:10:1:1/4;adversarial:12:1:1/4;"
      "adversarial:8:2:1/4;adversarial:10:2:1/4";
  std::string rr_out;
  std::uint64_t rr_seed = 0;
  redundancy->add_option("--points", rr_points,
                         "semicolon-separated scheme:n:t:eps grid points");
  redundancy->add_option("--seed", rr_seed, "build seed for sampled schemes");
  redundancy->add_option("--out", rr_out, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      const Ratio eps = parse_ratio(b_eps);
      const CodeParams params{b_n, b_t, eps.numerator(), eps.denominator()};
      std::string text;
      if (b_scheme == "adversarial") {
        const InnerHashSpec inner = pick_inner(b_inner, b_n, b_t, kDefaultEnumBudget);
        text = store_descriptor(adversarial_build(params, inner, b_seed, !b_no_verify));
      } else {
        const ObliviousScheme scheme = parse_scheme(b_scheme);
        ObliviousDescriptor d;
        switch (scheme) {
          case ObliviousScheme::explicit_primes: {
            const InnerHashSpec inner = pick_inner(b_inner, b_n, b_t, kDefaultEnumBudget);
            d = b_forced_m > 0 ? explicit_build_forced(params, inner, b_forced_m)
                               : explicit_build(params, inner);
            break;
          }
          case ObliviousScheme::randomized_primes: {
            const InnerHashSpec inner = pick_inner(b_inner, b_n, b_t, kDefaultEnumBudget);
            d = randomized_build(params, inner, b_seed, !b_no_verify);
            break;
          }
          case ObliviousScheme::list_wrapped: {
            ListCode lc = build_brute_force_list_code(b_n, b_t, b_list_size);
            const InnerHashSpec inner =
                pick_inner(b_inner == "auto" ? "greedy" : b_inner, b_n + lc.r_list, b_t,
                           kDefaultEnumBudget);
            d = list_wrap_build(std::move(lc), params, inner);
            break;
          }
          case ObliviousScheme::existential: {
            if (b_s < 1 || b_codebook < 1) {
              throw std::invalid_argument("existential build needs --s and --codebook-size");
            }
            d = existential_build(params, b_s, b_codebook, b_seed);
            break;
          }
        }
        text = store_descriptor(d);
      }
      if (b_out.empty()) {
        out << text;
      } else {
        write_text_file(b_out, text);
      }
      return 0;
    }

    if (encode->parsed()) {
      const std::string text = read_text_file(e_desc);
      Rng coins = Rng(e_seed).derive("cli-encode");
      if (peek_descriptor_kind(text) == DescriptorKind::adversarial) {
        const AdversarialDescriptor d = load_adversarial_descriptor(text);
        emit_word(adv_encode_full(d, read_word(in, e_in)), out, e_out);
        return 0;
      }
      const ObliviousDescriptor d = load_oblivious_descriptor(text);
      switch (d.scheme) {
        case ObliviousScheme::explicit_primes:
        case ObliviousScheme::randomized_primes:
          emit_word(systematic_encode(d, read_word(in, e_in), coins), out, e_out);
          return 0;
        case ObliviousScheme::list_wrapped:
          emit_word(list_wrap_encode(d, read_word(in, e_in), coins), out, e_out);
          return 0;
        case ObliviousScheme::existential: {
          std::int64_t index = 0;
          if (e_in.empty()) {
            index = std::stoll(read_line_token(in));
          } else {
            std::ifstream f(e_in, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open: " + e_in);
            index = static_cast<std::int64_t>(read_framed(f).value());
          }
          emit_word(existential_encode(d, static_cast<int>(index), coins), out, e_out);
          return 0;
        }
      }
      throw std::logic_error("encode: bad scheme");
    }

    if (corrupt_cmd->parsed()) {
      const ChannelInstance ch = ChannelInstance::parse(c_channel);
      emit_word(corrupt(ch, read_word(in, c_in), c_trial), out, c_out);
      return 0;
    }

    if (decode->parsed()) {
      const std::string text = read_text_file(d_desc);
      if (peek_descriptor_kind(text) == DescriptorKind::adversarial) {
        const AdversarialDescriptor d = load_adversarial_descriptor(text);
        emit_word(adv_decode_full(d, read_word(in, d_in)), out, d_out);
        return 0;
      }
      const ObliviousDescriptor d = load_oblivious_descriptor(text);
      const BitString z = read_word(in, d_in);
      std::optional<BitString> got;
      switch (d.scheme) {
        case ObliviousScheme::explicit_primes:
        case ObliviousScheme::randomized_primes:
          got = systematic_decode(d, z);
          break;
        case ObliviousScheme::list_wrapped:
          got = list_wrap_decode(d, z);
          break;
        case ObliviousScheme::existential: {
          const std::optional<int> idx = existential_decode(d, z);
          if (!idx.has_value()) {
            out << "bottom\n";
            return 0;
          }
          if (d_out.empty()) {
            out << *idx << '\n';
          } else {
            emit_word(BitString::from_value(static_cast<std::uint64_t>(*idx), d.params.n),
                      out, d_out);
          }
          return 0;
        }
      }
      if (!got.has_value()) {
        out << "bottom\n";
        return 0;
      }
      emit_word(*got, out, d_out);
      return 0;
    }

    if (verify->parsed()) return run_verify(vf, out, err);

    if (census->parsed()) {
      const Parallelism par = ce_serial ? Parallelism::serial : Parallelism::openmp;
      const std::uint64_t count = bad_string_census(ce_n, ce_ell, ce_t, par);
      const std::uint64_t cap = bad_string_census_bound(ce_n, ce_ell, ce_t);
      emit_csv(ce_out, out, [&](std::ostream& os) {
        os << "n,ell,t,count,bound\n"
           << ce_n << ',' << ce_ell << ',' << ce_t << ',' << count << ',' << cap << '\n';
      });
      return 0;
    }

    if (closep->parsed()) {
      const DeletionPattern tau = DeletionPattern::parse(cp_tau);
      const std::uint64_t count = close_patterns_count(tau, cp_ell);
      const std::uint64_t cap = close_patterns_bound(tau.deletions(), cp_ell);
      emit_csv(cp_out, out, [&](std::ostream& os) {
        os << "n,t,ell,tau,count,bound\n"
           << tau.n << ',' << tau.deletions() << ',' << cp_ell << ",\"" << tau.str() << "\","
           << count << ',' << cap << '\n';
      });
      return 0;
    }

    if (lower->parsed()) {
      const Ratio eps = parse_ratio(lb_eps);
      const double value = lower_bound_value(lb_n, lb_t, eps);
      emit_csv(lb_out, out, [&](std::ostream& os) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f", value);
        os << "n,t,eps,lower_bound_bits,lower_bound_tail\n"
           << lb_n << ',' << lb_t << ',' << ratio_str(eps) << ',' << buf << ','
           << kLowerBoundTail << '\n';
      });
      return 0;
    }

    if (reduction->parsed()) {
      const ObliviousDescriptor d = load_oblivious_descriptor(read_text_file(rd_desc));
      const auto results = reduction_distribution(d, rd_seed, rd_seeds);
      emit_csv(rd_out, out, [&](std::ostream& os) {
        os << "seed,avg_num,avg_den,always_codeword\n";
        for (const ReductionResult& r : results) {
          os << r.seed << ',' << r.average_error.numerator() << ','
             << r.average_error.denominator() << ',' << (r.outputs_always_codeword ? 1 : 0)
             << '\n';
        }
      });
      return 0;
    }

    if (gap->parsed()) {
      const GapWitness gw = model_gap_witness(gp_seed);
      emit_csv(gp_out, out, [&](std::ostream& os) {
        os << "forced_worst,witness_m,witness_tau,adversarial_worst\n"
           << ratio_str(gw.explicit_worst) << ',' << gw.witness_m << ",\"" << gw.witness_tau
           << "\"," << ratio_str(gw.adversarial_worst) << '\n';
      });
      return 0;
    }

    if (redundancy->parsed()) {
      std::vector<RedundancyGridPoint> grid;
      for (const std::string& tok : split(rr_points, ';')) {
        const auto parts = split(tok, ':');
        if (parts.size() != 4) {
          throw std::invalid_argument("grid point must be scheme:n:t:eps, got \"" + tok + "\"");
        }
        RedundancyGridPoint gp;
        gp.scheme = parts[0];
        gp.n = std::stoi(parts[1]);
        gp.t = std::stoi(parts[2]);
        gp.eps = parse_ratio(parts[3]);
        grid.push_back(std::move(gp));
      }
      const auto rows = redundancy_table(grid, rr_seed);
      emit_csv(rr_out, out, [&](std::ostream& os) { write_redundancy_csv(rows, os); });
      return 0;
    }

    throw std::logic_error("no subcommand handler ran");
  } catch (const budget_error& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace delcode
