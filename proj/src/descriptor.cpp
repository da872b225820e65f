#include "delcode/descriptor.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "delcode/bitseq.hpp"

namespace delcode {

namespace {

using json = nlohmann::ordered_json;

std::string i64_str(std::int64_t v) { return std::to_string(v); }
std::string u64_str(std::uint64_t v) { return std::to_string(v); }

std::string dbl_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("descriptor: " + what);
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) fail(std::string("missing field \"") + name + "\"");
  return *it;
}

std::string get_string(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) fail(std::string("field \"") + name + "\" must be a string");
  return v.get<std::string>();
}

std::int64_t get_i64(const json& j, const char* name) {
  const std::string s = get_string(j, name);
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing garbage");
    return v;
  } catch (const std::exception&) {
    fail(std::string("field \"") + name + "\" is not a decimal integer: \"" + s + "\"");
  }
}

std::uint64_t get_u64(const json& j, const char* name) {
  const std::string s = get_string(j, name);
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(s, &used);
    if (used != s.size() || s.front() == '-') throw std::invalid_argument("bad");
    return v;
  } catch (const std::exception&) {
    fail(std::string("field \"") + name + "\" is not an unsigned decimal integer: \"" + s +
         "\"");
  }
}

double get_double(const json& j, const char* name) {
  const std::string s = get_string(j, name);
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing garbage");
    return v;
  } catch (const std::exception&) {
    fail(std::string("field \"") + name + "\" is not a decimal number: \"" + s + "\"");
  }
}

json primes_to_json(const std::vector<std::int64_t>& primes) {
  json arr = json::array();
  for (std::int64_t p : primes) arr.push_back(i64_str(p));
  return arr;
}

std::vector<std::int64_t> primes_from_json(const json& arr, const char* name) {
  if (!arr.is_array()) fail(std::string("field \"") + name + "\" must be an array");
  std::vector<std::int64_t> out;
  out.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_string()) fail(std::string("entries of \"") + name + "\" must be strings");
    const std::string s = v.get<std::string>();
    std::size_t used = 0;
    std::int64_t p = 0;
    try {
      p = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) fail(std::string("bad integer in \"") + name + "\": \"" + s + "\"");
    out.push_back(p);
  }
  return out;
}

void check_primes_prime(const std::vector<std::int64_t>& primes, const char* name) {
  for (std::int64_t p : primes) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
      fail(std::string("listed value ") + i64_str(p) + " in \"" + name + "\" is not prime");
    }
  }
}

json inner_to_json(const InnerHashSpec& inner) {
  json j;
  j["kind"] = inner_kind_str(inner.kind);
  j["n"] = i64_str(inner.n);
  j["t"] = i64_str(inner.t);
  j["f"] = i64_str(inner.f);
  json colors = json::array();
  for (std::uint32_t c : inner.colors) colors.push_back(u64_str(c));
  j["colors"] = colors;
  return j;
}

InnerHashSpec inner_from_json(const json& j, std::uint64_t budget) {
  InnerHashSpec inner;
  inner.kind = parse_inner_kind(get_string(j, "kind"));
  inner.n = static_cast<int>(get_i64(j, "n"));
  inner.t = static_cast<int>(get_i64(j, "t"));
  inner.f = static_cast<int>(get_i64(j, "f"));
  if (inner.n < 1 || inner.n > packed::kMaxLen || inner.t < 0 || inner.t > inner.n ||
      inner.f < 0) {
    fail("inner-hash parameters out of range");
  }
  const json& colors = field(j, "colors");
  if (!colors.is_array()) fail("field \"colors\" must be an array");
  inner.colors.reserve(colors.size());
  for (const json& v : colors) {
    if (!v.is_string()) fail("entries of \"colors\" must be strings");
    const std::uint64_t c = std::stoull(v.get<std::string>());
    if (c > 0xffffffffULL) fail("color value out of range");
    inner.colors.push_back(static_cast<std::uint32_t>(c));
  }

  if (inner.kind == InnerKind::vt_syndrome) {
    if (!inner.colors.empty()) fail("syndrome hash carries no color table");
    if (inner != make_vt_spec(inner.n)) fail("syndrome hash fields are inconsistent");
    return inner;
  }
  // Greedy coloring: full table required, then a confusable-distinctness
  // spot check on a deterministic sample of words.
  const std::uint64_t expect = std::uint64_t{1} << inner.n;
  if (inner.colors.size() != expect) {
    fail("color table has " + u64_str(inner.colors.size()) + " entries, expected " +
         u64_str(expect));
  }
  for (std::uint32_t c : inner.colors) {
    if (inner.f < 32 && c >= (std::uint32_t{1} << inner.f)) {
      fail("color value does not fit the declared hash width");
    }
  }
  const std::uint64_t step = expect <= 8 ? 1 : expect / 8;
  for (std::uint64_t v = 0; v < expect; v += step) {
    const BitString m = BitString::from_value(v, inner.n);
    for (const BitString& w : confusable_set(m, inner.t, budget)) {
      if (w == m) continue;
      if (inner.colors[w.value()] == inner.colors[m.value()]) {
        fail("color table violates confusable-distinctness at words " + m.str() + " and " +
             w.str());
      }
    }
  }
  return inner;
}

json params_to_json(const CodeParams& p) {
  json j;
  j["n"] = i64_str(p.n);
  j["t"] = i64_str(p.t);
  j["eps_num"] = i64_str(p.eps_num);
  j["eps_den"] = i64_str(p.eps_den);
  return j;
}

CodeParams params_from_json(const json& j) {
  CodeParams p;
  p.n = static_cast<int>(get_i64(j, "n"));
  p.t = static_cast<int>(get_i64(j, "t"));
  p.eps_num = get_i64(j, "eps_num");
  p.eps_den = get_i64(j, "eps_den");
  if (p.n < 1 || p.n > packed::kMaxLen || p.t < 0 || p.t >= p.n) fail("params out of range");
  if (p.eps_den <= 0 || p.eps_num < 0 || p.eps_num > p.eps_den) {
    fail("error parameter must be a fraction in [0, 1]");
  }
  return p;
}

json common_header(DescriptorKind kind) {
  json j;
  j["format_version"] = kDescriptorFormatVersion;
  j["kind"] = kind == DescriptorKind::oblivious ? "oblivious" : "adversarial";
  return j;
}

json parse_and_check_header(const std::string& text, const char* want_kind) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  const std::string version = get_string(j, "format_version");
  if (version != kDescriptorFormatVersion) {
    fail("format version \"" + version + "\" does not match \"" + kDescriptorFormatVersion +
         "\"");
  }
  const std::string kind = get_string(j, "kind");
  if (kind != want_kind) {
    fail("expected a " + std::string(want_kind) + " descriptor, got \"" + kind + "\"");
  }
  return j;
}

// Sieved window list must re-derive from its range.
void check_range_primes(const std::vector<std::int64_t>& listed, std::int64_t m_bound,
                        std::uint64_t budget) {
  check_primes_prime(listed, "range_primes");
  const auto derived = primes_in_range(PrimeRange::half_to(m_bound), budget);
  if (listed != derived) {
    fail("range_primes do not match the sieve of [" + i64_str(m_bound / 2) + ", " +
         i64_str(m_bound) + "]");
  }
}

// Sampled multiset must re-derive from (range, count, seed).
void check_sampled(const SampledPrimeSet& s, std::uint64_t budget) {
  check_primes_prime(s.primes, "sampled.primes");
  const SampledPrimeSet derived =
      sample_prime_multiset(s.range, static_cast<int>(s.primes.size()), s.seed, budget);
  if (derived.primes != s.primes) {
    fail("sampled primes do not re-derive from their (range, count, seed)");
  }
}

}  // namespace

DescriptorKind peek_descriptor_kind(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  const std::string kind = get_string(j, "kind");
  if (kind == "oblivious") return DescriptorKind::oblivious;
  if (kind == "adversarial") return DescriptorKind::adversarial;
  fail("unknown descriptor kind \"" + kind + "\"");
}

std::string store_descriptor(const ObliviousDescriptor& d) {
  json j = common_header(DescriptorKind::oblivious);
  j["scheme"] = scheme_str(d.scheme);
  j["params"] = params_to_json(d.params);
  j["build_seed"] = u64_str(d.build_seed);
  if (d.scheme != ObliviousScheme::existential) j["inner"] = inner_to_json(d.inner);
  j["m_bound"] = i64_str(d.m_bound);
  j["nominal_m"] = dbl_str(d.nominal_m);
  j["range_primes"] = primes_to_json(d.range_primes);

  if (d.scheme == ObliviousScheme::randomized_primes) {
    json s;
    s["seed"] = u64_str(d.sampled.seed);
    s["count"] = u64_str(d.sampled.primes.size());
    s["primes"] = primes_to_json(d.sampled.primes);
    j["sampled"] = s;
  }
  if (d.scheme == ObliviousScheme::list_wrapped) {
    json lc;
    lc["n"] = i64_str(d.listcode.n);
    lc["t"] = i64_str(d.listcode.t);
    lc["L"] = i64_str(d.listcode.L);
    lc["r_list"] = i64_str(d.listcode.r_list);
    j["listcode"] = lc;
  }
  if (d.scheme == ObliviousScheme::existential) {
    json sampler;
    sampler["s"] = i64_str(d.s);
    json cb = json::array();
    for (const auto& multiset : d.codebook) {
      json row = json::array();
      for (const BitString& w : multiset) row.push_back(w.str());
      cb.push_back(row);
    }
    sampler["codebook"] = cb;
    json kept = json::array();
    for (std::uint8_t flag : d.surviving) kept.push_back(flag ? "1" : "0");
    sampler["surviving"] = kept;
    j["sampler"] = sampler;
  }

  json notes = json::array();
  notes.push_back("tag layout: prime field (value or index) big-endian, then residue");
  notes.push_back("systematic/list tag protector = repeat-each-bit (t+1) repetition code");
  notes.push_back(
      "modulus cap chosen by doubling search with exact rational slack; window [M/2, M]");
  j["notes"] = notes;
  return j.dump(2) + "\n";
}

std::string store_descriptor(const AdversarialDescriptor& d) {
  json j = common_header(DescriptorKind::adversarial);
  j["scheme"] = "randomized-adversarial";
  j["params"] = params_to_json(d.params);
  j["inner"] = inner_to_json(d.inner);
  j["m_bound"] = i64_str(d.m_bound);
  j["nominal_m0"] = dbl_str(d.nominal_m0);
  j["range_primes"] = primes_to_json(d.range_primes);
  json s;
  s["seed"] = u64_str(d.sampled.seed);
  s["count"] = u64_str(d.sampled.primes.size());
  s["primes"] = primes_to_json(d.sampled.primes);
  j["sampled"] = s;
  json good = json::array();
  for (std::int32_t idx : d.good_prime_index) good.push_back(i64_str(idx));
  j["good_prime_index"] = good;
  json notes = json::array();
  notes.push_back("tag layout: prime index big-endian, then residue");
  notes.push_back("good prime = first sampled prime separating m from its confusable set");
  j["notes"] = notes;
  return j.dump(2) + "\n";
}

ObliviousDescriptor load_oblivious_descriptor(const std::string& json_text,
                                              std::uint64_t budget) {
  const json j = parse_and_check_header(json_text, "oblivious");
  ObliviousDescriptor d;
  d.scheme = parse_scheme(get_string(j, "scheme"));
  d.params = params_from_json(field(j, "params"));
  d.build_seed = get_u64(j, "build_seed");
  d.m_bound = get_i64(j, "m_bound");
  d.nominal_m = get_double(j, "nominal_m");
  d.range_primes = primes_from_json(field(j, "range_primes"), "range_primes");

  const bool prime_scheme = d.scheme != ObliviousScheme::existential;
  if (prime_scheme) {
    d.inner = inner_from_json(field(j, "inner"), budget);
    if (d.m_bound < 4) fail("modulus cap out of range");
    check_range_primes(d.range_primes, d.m_bound, budget);
  } else if (!d.range_primes.empty() || d.m_bound != 0) {
    fail("sampler descriptors carry no prime window");
  }

  // The list scheme checks the inner (n, t) after the list code is known.
  if (prime_scheme && d.scheme != ObliviousScheme::list_wrapped &&
      (d.inner.n != d.params.n || d.inner.t != d.params.t)) {
    fail("inner hash was built for different (n, t)");
  }

  if (d.scheme == ObliviousScheme::randomized_primes) {
    const json& s = field(j, "sampled");
    d.sampled.range = PrimeRange::half_to(d.m_bound);
    d.sampled.seed = get_u64(s, "seed");
    d.sampled.primes = primes_from_json(field(s, "primes"), "sampled.primes");
    if (get_u64(s, "count") != d.sampled.primes.size()) {
      fail("sampled prime count disagrees with the list length");
    }
    check_sampled(d.sampled, budget);
  }

  if (d.scheme == ObliviousScheme::list_wrapped) {
    const json& lc = field(j, "listcode");
    const int ln = static_cast<int>(get_i64(lc, "n"));
    const int lt = static_cast<int>(get_i64(lc, "t"));
    const int lL = static_cast<int>(get_i64(lc, "L"));
    const int lr = static_cast<int>(get_i64(lc, "r_list"));
    if (ln != d.params.n || lt != d.params.t) fail("list code (n, t) mismatch");
    // The greedy search is deterministic; rebuild and compare.
    d.listcode = build_brute_force_list_code(ln, lt, lL, budget);
    if (d.listcode.r_list != lr) {
      fail("list code does not re-derive: r_list " + i64_str(d.listcode.r_list) +
           " vs stored " + i64_str(lr));
    }
    d.list_size = lL;
    if (d.inner.n != ln + lr || d.inner.t != lt) {
      fail("inner hash was built for different (n, t)");
    }
  }

  if (d.scheme == ObliviousScheme::existential) {
    const json& sampler = field(j, "sampler");
    d.s = static_cast<int>(get_i64(sampler, "s"));
    if (d.s < 1) fail("sampler multiset size out of range");
    const json& cb = field(sampler, "codebook");
    if (!cb.is_array() || cb.empty()) fail("sampler codebook must be a nonempty array");
    for (const json& row : cb) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(d.s)) {
        fail("sampler codebook row has the wrong multiset size");
      }
      std::vector<BitString> multiset;
      for (const json& w : row) {
        if (!w.is_string()) fail("codebook entries must be bit strings");
        BitString b = BitString::parse(w.get<std::string>());
        if (b.size() != d.params.n) fail("codebook entry has the wrong length");
        multiset.push_back(std::move(b));
      }
      d.codebook.push_back(std::move(multiset));
    }
    const json& kept = field(sampler, "surviving");
    if (!kept.is_array() || kept.size() != d.codebook.size()) {
      fail("surviving flags must match the codebook size");
    }
    for (const json& flag : kept) {
      const std::string s = flag.get<std::string>();
      if (s != "0" && s != "1") fail("surviving flags must be \"0\" or \"1\"");
      d.surviving.push_back(s == "1" ? 1 : 0);
    }
  }
  return d;
}

AdversarialDescriptor load_adversarial_descriptor(const std::string& json_text,
                                                  std::uint64_t budget) {
  const json j = parse_and_check_header(json_text, "adversarial");
  if (get_string(j, "scheme") != "randomized-adversarial") {
    fail("adversarial descriptors mark scheme = \"randomized-adversarial\"");
  }
  AdversarialDescriptor d;
  d.params = params_from_json(field(j, "params"));
  d.inner = inner_from_json(field(j, "inner"), budget);
  if (d.inner.n != d.params.n || d.inner.t != d.params.t) {
    fail("inner hash was built for different (n, t)");
  }
  d.m_bound = get_i64(j, "m_bound");
  if (d.m_bound < 4) fail("modulus cap out of range");
  d.nominal_m0 = get_double(j, "nominal_m0");
  d.range_primes = primes_from_json(field(j, "range_primes"), "range_primes");
  check_range_primes(d.range_primes, d.m_bound, budget);

  const json& s = field(j, "sampled");
  d.sampled.range = PrimeRange::half_to(d.m_bound);
  d.sampled.seed = get_u64(s, "seed");
  d.sampled.primes = primes_from_json(field(s, "primes"), "sampled.primes");
  if (get_u64(s, "count") != d.sampled.primes.size()) {
    fail("sampled prime count disagrees with the list length");
  }
  check_sampled(d.sampled, budget);

  const json& good = field(j, "good_prime_index");
  if (!good.is_array()) fail("field \"good_prime_index\" must be an array");
  for (const json& v : good) {
    const std::int64_t idx = std::stoll(v.get<std::string>());
    if (idx < 0 || idx >= static_cast<std::int64_t>(d.sampled.primes.size())) {
      fail("good prime index out of range");
    }
    d.good_prime_index.push_back(static_cast<std::int32_t>(idx));
  }
  if (!d.good_prime_index.empty() &&
      d.good_prime_index.size() != (std::size_t{1} << d.params.n)) {
    fail("good prime table must cover all messages or be empty");
  }
  return d;
}

bool descriptors_equal(const ObliviousDescriptor& a, const ObliviousDescriptor& b) {
  return a.scheme == b.scheme && a.params.n == b.params.n && a.params.t == b.params.t &&
         a.params.eps_num == b.params.eps_num && a.params.eps_den == b.params.eps_den &&
         a.inner == b.inner && a.m_bound == b.m_bound && a.nominal_m == b.nominal_m &&
         a.range_primes == b.range_primes && a.sampled.range == b.sampled.range &&
         a.sampled.primes == b.sampled.primes && a.sampled.seed == b.sampled.seed &&
         a.listcode.n == b.listcode.n && a.listcode.t == b.listcode.t &&
         a.listcode.L == b.listcode.L && a.listcode.r_list == b.listcode.r_list &&
         a.listcode.codewords == b.listcode.codewords && a.list_size == b.list_size &&
         a.s == b.s && a.codebook == b.codebook && a.surviving == b.surviving &&
         a.build_seed == b.build_seed;
}

bool descriptors_equal(const AdversarialDescriptor& a, const AdversarialDescriptor& b) {
  return a.params.n == b.params.n && a.params.t == b.params.t &&
         a.params.eps_num == b.params.eps_num && a.params.eps_den == b.params.eps_den &&
         a.inner == b.inner && a.m_bound == b.m_bound && a.nominal_m0 == b.nominal_m0 &&
         a.range_primes == b.range_primes && a.sampled.range == b.sampled.range &&
         a.sampled.primes == b.sampled.primes && a.sampled.seed == b.sampled.seed &&
         a.good_prime_index == b.good_prime_index;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace delcode
