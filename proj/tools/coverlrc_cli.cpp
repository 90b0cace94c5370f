// coverlrc command-line front end: bound tables, encode/corrupt/repair round
// trips, exact local-decoding probability tables, seeded Monte Carlo
// simulation, and oracle verification.
//
// Exit codes: 0 = success, 1 = verification mismatch, 2 = invalid
// configuration.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "coverlrc/coverlrc.hpp"

using namespace coverlrc;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadConfig = 2;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// shared option plumbing

struct CommonOpts {
  size_t n = 0;
  std::optional<size_t> k, kprime;
  size_t r = 0, rho = 0;
  std::string field_spec;  // "p,m"
  std::string mode = "erasures";
  std::string construction = "both";
  long t_min = -1, t_max = -1;
  size_t trials = 10000;
  uint64_t seed = 1;
  std::string out_path;
  std::string format;
  std::string config_path;
};

void add_common_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--n", o.n, "array side length n");
  cmd->add_option("--k", o.k, "array code dimension k (a multiple of n)");
  cmd->add_option("--kprime", o.kprime, "constituent code dimension k' = k/n");
  cmd->add_option("--r", o.r, "locality r");
  cmd->add_option("--rho", o.rho, "local distance rho");
  cmd->add_option("--field", o.field_spec, "field as p,m (e.g. 13,1 or 2,8)");
  cmd->add_option("--mode", o.mode, "errors | erasures | both")
      ->check(CLI::IsMember({"errors", "erasures", "both"}));
  cmd->add_option("--construction", o.construction, "cover | rank | both")
      ->check(CLI::IsMember({"cover", "rank", "both"}));
  cmd->add_option("--t-min", o.t_min, "smallest corrupted-line count");
  cmd->add_option("--t-max", o.t_max, "largest corrupted-line count");
  cmd->add_option("--trials", o.trials, "Monte Carlo trials per t");
  cmd->add_option("--seed", o.seed, "RNG seed")->envname("COVER_LRC_SEED");
  cmd->add_option("--out", o.out_path, "output file (default: stdout)");
  cmd->add_option("--format", o.format, "csv | json (bound/roundtrip also: text)");
  cmd->add_option("--config", o.config_path, "JSON config file; flags override file values");
}

// Fill options the user did not pass from the JSON config file.
void apply_config(const CLI::App* cmd, CommonOpts& o) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw CliError("cannot open config file " + o.config_path);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::parse_error& e) {
    throw CliError(std::string("config parse error: ") + e.what());
  }
  auto unset = [&](const std::string& flag) { return cmd->count(flag) == 0; };
  if (cfg.contains("n") && unset("--n")) o.n = cfg["n"].get<size_t>();
  if (cfg.contains("k") && unset("--k")) o.k = cfg["k"].get<size_t>();
  if (cfg.contains("kprime") && unset("--kprime")) o.kprime = cfg["kprime"].get<size_t>();
  if (cfg.contains("r") && unset("--r")) o.r = cfg["r"].get<size_t>();
  if (cfg.contains("rho") && unset("--rho")) o.rho = cfg["rho"].get<size_t>();
  if (cfg.contains("field") && unset("--field")) {
    if (cfg["field"].is_array())
      o.field_spec = std::to_string(cfg["field"][0].get<uint32_t>()) + "," +
                     std::to_string(cfg["field"][1].get<uint32_t>());
    else
      o.field_spec = cfg["field"].get<std::string>();
  }
  if (cfg.contains("mode") && unset("--mode")) o.mode = cfg["mode"].get<std::string>();
  if (cfg.contains("construction") && unset("--construction")) o.construction = cfg["construction"].get<std::string>();
  if (cfg.contains("t_min") && unset("--t-min")) o.t_min = cfg["t_min"].get<long>();
  if (cfg.contains("t_max") && unset("--t-max")) o.t_max = cfg["t_max"].get<long>();
  if (cfg.contains("trials") && unset("--trials")) o.trials = cfg["trials"].get<size_t>();
  if (cfg.contains("seed") && unset("--seed")) o.seed = cfg["seed"].get<uint64_t>();
  if (cfg.contains("out") && unset("--out")) o.out_path = cfg["out"].get<std::string>();
  if (cfg.contains("format") && unset("--format")) o.format = cfg["format"].get<std::string>();
}

size_t resolve_kprime(const CommonOpts& o) {
  if (o.kprime) {
    if (o.k && *o.k != *o.kprime * o.n) throw CliError("--k and --kprime disagree");
    return *o.kprime;
  }
  if (o.k) {
    if (o.n == 0 || *o.k % o.n != 0) throw CliError("precondition violated: n must divide k");
    return *o.k / o.n;
  }
  throw CliError("need --k or --kprime");
}

Field resolve_field(const CommonOpts& o, size_t nl) {
  if (o.field_spec.empty()) return default_field_for(o.n, nl);
  const auto comma = o.field_spec.find(',');
  if (comma == std::string::npos) throw CliError("--field expects p,m");
  const uint32_t p = static_cast<uint32_t>(std::stoul(o.field_spec.substr(0, comma)));
  const uint32_t m = static_cast<uint32_t>(std::stoul(o.field_spec.substr(comma + 1)));
  return Field(p, m);
}

struct Output {
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw CliError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

std::vector<unsigned> parse_index_list(const std::string& csv) {
  std::vector<unsigned> out;
  std::stringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (!tok.empty()) out.push_back(static_cast<unsigned>(std::stoul(tok)));
  }
  return out;
}

std::string fixed3(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

// ---------------------------------------------------------------------------
// bound

int cmd_bound(const CommonOpts& o) {
  if (o.n == 0 || o.r == 0 || o.rho == 0) throw CliError("bound requires --n, --r, --rho and --k/--kprime");
  const size_t kprime = resolve_kprime(o);
  const size_t nl = o.r + o.rho - 1;
  const long hamming = lrc_singleton_bound(static_cast<long>(o.n), static_cast<long>(kprime),
                                           static_cast<long>(o.r), static_cast<long>(o.rho));
  const long cover = cover_lrc_singleton_bound(static_cast<long>(o.n), static_cast<long>(o.n * kprime),
                                               static_cast<long>(o.r), static_cast<long>(o.rho));

  std::string construction = "none";
  std::string achieves = "n/a";
  try {
    const Field f = resolve_field(o, nl);
    const TamoBargLrc tb = make_tamo_barg_lrc(f, o.n, kprime, o.r, o.rho);
    std::ostringstream label;
    label << "[" << o.n << "x" << o.n << "," << o.n * kprime << "," << tb.design_distance << "," << o.r << ","
          << o.rho << "]_" << f.label();
    construction = label.str();
    achieves = static_cast<long>(tb.design_distance) == cover ? "yes" : "no";
  } catch (const std::invalid_argument& e) {
    construction = std::string("none (") + e.what() + ")";
  }

  Output out(o.out_path);
  if (o.format == "csv") {
    out.stream() << "n,k,kprime,r,rho,nl,mu,hamming_bound,cover_bound,construction,achieves_bound\n"
                 << o.n << "," << o.n * kprime << "," << kprime << "," << o.r << "," << o.rho << "," << nl << ","
                 << o.n / nl << "," << hamming << "," << cover << ",\"" << construction << "\"," << achieves
                 << "\n";
  } else if (o.format == "json") {
    json j{{"n", o.n},
           {"k", o.n * kprime},
           {"kprime", kprime},
           {"r", o.r},
           {"rho", o.rho},
           {"nl", nl},
           {"mu", o.n / nl},
           {"hamming_bound", hamming},
           {"cover_bound", cover},
           {"construction", construction},
           {"achieves_bound", achieves}};
    out.stream() << j.dump(2) << "\n";
  } else {
    out.stream() << "n=" << o.n << " k=" << o.n * kprime << " kprime=" << kprime << " r=" << o.r
                 << " rho=" << o.rho << " nl=" << nl << " mu=" << o.n / nl << "\n"
                 << "hamming_bound=" << hamming << "\n"
                 << "cover_bound=" << cover << "\n"
                 << "construction=" << construction << "\n"
                 << "achieves_bound=" << achieves << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// roundtrip

int cmd_roundtrip(const CommonOpts& o, const std::string& rows_csv, const std::string& cols_csv, long t_random) {
  if (o.n == 0 || o.r == 0 || o.rho == 0) throw CliError("roundtrip requires --n, --r, --rho and --k/--kprime");
  if (o.mode == "both") throw CliError("roundtrip runs one mode at a time");
  const size_t kprime = resolve_kprime(o);
  const size_t nl = o.r + o.rho - 1;
  const Field f = resolve_field(o, nl);
  const ArrayLrc code = ArrayLrc::from(make_tamo_barg_lrc(f, o.n, kprime, o.r, o.rho));

  std::mt19937_64 rng(o.seed);
  const Matrix message = random_matrix(rng, f, kprime, o.n);
  const auto t0 = std::chrono::steady_clock::now();
  const Matrix codeword = code.encode(message);
  const auto t1 = std::chrono::steady_clock::now();

  LineSet pattern;
  if (!rows_csv.empty() || !cols_csv.empty()) {
    pattern = LineSet::rows_and_cols(o.n, parse_index_list(rows_csv), parse_index_list(cols_csv));
  } else if (t_random >= 0) {
    pattern = sample_line_set(rng, 2 * o.n, static_cast<size_t>(t_random));
  }

  auto [rows, cols] = pattern.split(o.n);
  Matrix corrupted = codeword;
  const bool erasures = o.mode == "erasures";
  if (erasures) {
    for (size_t r : rows)
      for (size_t c = 0; c < o.n; ++c) corrupted(r, c) = 0;
    for (size_t c : cols)
      for (size_t r = 0; r < o.n; ++r) corrupted(r, c) = 0;
  } else {
    Matrix error(f, o.n, o.n);
    for (size_t r : rows)
      for (size_t c = 0; c < o.n; ++c) error(r, c) = random_nonzero(rng, f);
    for (size_t c : cols)
      for (size_t r = 0; r < o.n; ++r) error(r, c) = random_nonzero(rng, f);
    if (pattern.size() < o.n && cover_weight(error) != pattern.size())
      throw CliError("internal: error matrix weight mismatch");
    corrupted = codeword + error;
  }

  bool local_ok = false, global_ok = false, exact = true;
  std::vector<std::pair<size_t, size_t>> failed_blocks;
  Matrix repaired(f, o.n, o.n);
  const auto t2 = std::chrono::steady_clock::now();
  if (erasures) {
    const auto local = code.local_repair(corrupted, pattern);
    local_ok = local.fully_repaired();
    failed_blocks = local.failed_blocks;
    const auto global = code.decode_erasures(corrupted, pattern);
    global_ok = global.ok();
    if (global_ok) {
      repaired = global.codeword;
      exact = repaired == codeword && global.message == message;
    }
  } else {
    const auto global = code.decode_errors(corrupted);
    global_ok = global.ok();
    if (global_ok) {
      repaired = global.codeword;
      exact = repaired == codeword && global.message == message;
    }
  }
  const auto t3 = std::chrono::steady_clock::now();
  const auto us = [](auto a, auto b) {
    return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count();
  };

  Output out(o.out_path);
  if (o.format == "json") {
    json j{{"params",
            {{"n", o.n},
             {"kprime", kprime},
             {"r", o.r},
             {"rho", o.rho},
             {"field", field_to_json(f)},
             {"mode", o.mode},
             {"seed", o.seed}}},
           {"message", matrix_to_json(message)},
           {"codeword", matrix_to_json(codeword)},
           {"erased_lines", lineset_to_json(pattern)},
           {"repaired", global_ok ? matrix_to_json(repaired) : json()},
           {"verdicts",
            {{"local_repair", erasures ? json(local_ok) : json()},
             {"global_decode", global_ok},
             {"exact", global_ok ? json(exact) : json()}}},
           {"timing_us", {{"encode", us(t0, t1)}, {"decode", us(t2, t3)}}}};
    out.stream() << j.dump(2) << "\n";
  } else {
    out.stream() << "code=[" << o.n << "x" << o.n << "," << o.n * kprime << "] over " << f.label()
                 << " mode=" << o.mode << " seed=" << o.seed << "\n";
    out.stream() << "pattern=" << lineset_to_json(pattern).dump() << " (t=" << pattern.size() << ")\n";
    if (erasures) {
      out.stream() << "local_repair=" << (local_ok ? "repaired" : "failed") << "\n";
      if (!local_ok) {
        out.stream() << "failed_blocks=";
        for (const auto& [a, b] : failed_blocks) out.stream() << "(" << a + 1 << "," << b + 1 << ")";
        out.stream() << "\n";
      }
    }
    out.stream() << "global_decode=" << (global_ok ? "recovered" : "failed") << "\n";
    if (global_ok) out.stream() << "exact=" << (exact ? "yes" : "no") << "\n";
    out.stream() << "encode_us=" << us(t0, t1) << " decode_us=" << us(t2, t3) << "\n";
  }
  if (global_ok && !exact) {
    std::cerr << "mismatch: decoded word differs from the encoded one\n";
    return kExitMismatch;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// plocal

int cmd_plocal(const CommonOpts& o) {
  if (o.n == 0 || o.r == 0 || o.rho == 0) throw CliError("plocal requires --n, --r, --rho");
  const size_t nl = o.r + o.rho - 1;
  if (o.n % nl != 0) throw CliError("precondition violated: r + rho - 1 must divide n");
  const size_t mu = o.n / nl;
  const long t_min = o.t_min < 0 ? 0 : o.t_min;
  const long t_max = o.t_max < 0 ? static_cast<long>(2 * o.n) : o.t_max;
  if (t_min < 0 || t_max > static_cast<long>(2 * o.n) || t_min > t_max)
    throw CliError("t-range must lie within [0, 2n]");

  std::vector<CorruptionMode> modes;
  if (o.mode == "errors" || o.mode == "both") modes.push_back(CorruptionMode::errors);
  if (o.mode == "erasures" || o.mode == "both") modes.push_back(CorruptionMode::erasures);

  PatternCounter counter(static_cast<long long>(nl));
  Output out(o.out_path);
  const bool as_json = o.format == "json";
  json jrows = json::array();
  if (!as_json) out.stream() << "t,p_cover,p_rank,mode\n";
  for (CorruptionMode mode : modes) {
    const PatternParams params{o.n, nl, mu, o.rho, mode};
    const char* mode_name = mode == CorruptionMode::errors ? "errors" : "erasures";
    for (long t = t_min; t <= t_max; ++t) {
      const Rational pc = local_decoding_probability(params, static_cast<size_t>(t), Construction::cover, counter);
      const Rational pr =
          local_decoding_probability(params, static_cast<size_t>(t), Construction::rank_metric, counter);
      if (as_json) {
        jrows.push_back(
            {{"t", t}, {"p_cover", decimal_string(pc)}, {"p_rank", decimal_string(pr)}, {"mode", mode_name}});
      } else {
        out.stream() << t << "," << decimal_string(pc) << "," << decimal_string(pr) << "," << mode_name << "\n";
      }
    }
  }
  if (as_json) out.stream() << jrows.dump(2) << "\n";

  // marker abscissae from the code distance, when the dimension is known
  if (o.k || o.kprime) {
    const size_t kprime = resolve_kprime(o);
    const long d = lrc_singleton_bound(static_cast<long>(o.n), static_cast<long>(kprime), static_cast<long>(o.r),
                                       static_cast<long>(o.rho));
    std::cerr << "marker t=floor((d-1)/2)=" << (d - 1) / 2 << " (errors), t=d-1=" << d - 1 << " (erasures), d=" << d
              << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(const CommonOpts& o, bool check_decoder) {
  if (o.n == 0 || o.r == 0 || o.rho == 0) throw CliError("simulate requires --n, --r, --rho");
  if (o.mode == "both") throw CliError("simulate runs one mode at a time");
  const size_t nl = o.r + o.rho - 1;
  if (o.n % nl != 0) throw CliError("precondition violated: r + rho - 1 must divide n");
  if (o.trials < 1) throw CliError("need at least one trial");
  const size_t mu = o.n / nl;
  const CorruptionMode mode = o.mode == "errors" ? CorruptionMode::errors : CorruptionMode::erasures;
  const PatternParams params{o.n, nl, mu, o.rho, mode};
  const long t_min = o.t_min < 0 ? 1 : o.t_min;
  const long t_max = o.t_max < 0 ? std::min<long>(8, static_cast<long>(2 * o.n)) : o.t_max;
  if (t_min < 0 || t_max > static_cast<long>(2 * o.n) || t_min > t_max)
    throw CliError("t-range must lie within [0, 2n]");

  std::vector<Construction> constructions;
  if (o.construction == "cover" || o.construction == "both") constructions.push_back(Construction::cover);
  if (o.construction == "rank" || o.construction == "both") constructions.push_back(Construction::rank_metric);

  std::optional<ArrayLrc> code;
  std::optional<Matrix> codeword;
  if (check_decoder) {
    if (mode != CorruptionMode::erasures || constructions.front() != Construction::cover)
      throw CliError("--decode applies to the cover construction in erasure mode");
    const size_t kprime = resolve_kprime(o);
    const Field f = resolve_field(o, nl);
    code.emplace(ArrayLrc::from(make_tamo_barg_lrc(f, o.n, kprime, o.r, o.rho)));
    std::mt19937_64 rng(o.seed);
    codeword = code->encode(random_matrix(rng, f, kprime, o.n));
  }

  PatternCounter counter(static_cast<long long>(nl));
  Output out(o.out_path);
  out.stream() << "t,construction,mode,trials,successes,p_empirical,p_exact,abs_error_sigma\n";
  size_t cells = 0, within = 0;
  for (Construction cons : constructions) {
    const char* cons_name = cons == Construction::cover ? "cover" : "rank";
    for (long t = t_min; t <= t_max; ++t) {
      size_t hits = 0;
      for (size_t trial = 0; trial < o.trials; ++trial) {
        std::mt19937_64 rng(o.seed ^ static_cast<uint64_t>(trial));
        const LineSet pattern = sample_line_set(rng, 2 * o.n, static_cast<size_t>(t));
        const bool predicted = is_locally_decodable(pattern, params, cons);
        if (check_decoder && cons == Construction::cover) {
          const bool repaired = code->local_repair(*codeword, pattern).fully_repaired();
          if (repaired != predicted) {
            std::cerr << "mismatch: predicate=" << predicted << " decoder=" << repaired
                      << " pattern=" << lineset_to_json(pattern).dump() << " t=" << t << " trial=" << trial << "\n";
            return kExitMismatch;
          }
        }
        hits += predicted;
      }
      const Rational exact = local_decoding_probability(params, static_cast<size_t>(t), cons, counter);
      const Rational empirical(static_cast<long long>(hits), static_cast<long long>(o.trials));
      const double p = static_cast<double>(exact);
      const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(o.trials));
      const double err = std::abs(static_cast<double>(empirical) - p);
      const double dev = sigma == 0.0 ? (err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity()) : err / sigma;
      ++cells;
      within += (dev <= 4.0);
      out.stream() << t << "," << cons_name << "," << o.mode << "," << o.trials << "," << hits << ","
                   << decimal_string(empirical) << "," << decimal_string(exact) << "," << fixed3(dev) << "\n";
    }
  }
  std::cerr << within << "/" << cells << " cells within 4 standard errors\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const CommonOpts& o) {
  const size_t n = o.n == 0 ? 9 : o.n;
  const size_t r = o.r == 0 ? 2 : o.r;
  const size_t rho = o.rho == 0 ? 2 : o.rho;
  const size_t nl = r + rho - 1;
  if (n % nl != 0) throw CliError("precondition violated: r + rho - 1 must divide n");
  const size_t mu = n / nl;
  const size_t kprime = o.kprime ? *o.kprime : (o.k ? resolve_kprime(o) : 2 * r);
  const long t_max = o.t_max < 0 ? 6 : o.t_max;  // exhaustive pattern size cap

  // 1. matching-based cover weight vs exhaustive subset search
  {
    std::mt19937_64 rng(o.seed);
    Field f2(2, 1), f4(2, 2);
    for (size_t trial = 0; trial < o.trials; ++trial) {
      const Matrix e = trial % 2 == 0 ? random_matrix(rng, f2, 4, 4) : random_matrix(rng, f4, 5, 5);
      const size_t fast = cover_weight(e);
      const size_t slow = cover_weight_exhaustive(e);
      if (fast != slow) {
        std::cerr << "MISMATCH cover weight: matching=" << fast << " brute_force=" << slow
                  << " matrix=" << matrix_to_json(e).dump() << "\n";
        return kExitMismatch;
      }
    }
    std::cout << "ok: cover weight matches brute force (" << o.trials << " random matrices)\n";
  }

  // 2. counting formulas vs exhaustive pattern enumeration
  {
    PatternCounter counter(static_cast<long long>(nl));
    size_t checked = 0;
    for (CorruptionMode mode : {CorruptionMode::errors, CorruptionMode::erasures}) {
      const PatternParams params{n, nl, mu, rho, mode};
      for (size_t t = 0; t <= 2 * n; ++t) {
        if (binomial(static_cast<long long>(2 * n), static_cast<long long>(t)) > 1'000'000) continue;
        for (Construction cons : {Construction::cover, Construction::rank_metric}) {
          const Rational formula = local_decoding_probability(params, t, cons, counter);
          const Rational oracle = oracle_enumerate(params, t, cons);
          if (formula != oracle) {
            std::cerr << "MISMATCH counting: t=" << t
                      << " mode=" << (mode == CorruptionMode::errors ? "errors" : "erasures")
                      << " construction=" << (cons == Construction::cover ? "cover" : "rank")
                      << " formula=" << decimal_string(formula) << " oracle=" << decimal_string(oracle) << "\n";
            return kExitMismatch;
          }
          ++checked;
        }
      }
    }
    std::cout << "ok: counting formulas match enumeration (" << checked << " (t, mode, construction) cells)\n";
  }

  // 3. predicate vs the actual local repair, exhaustive up to t_max
  {
    const Field f = resolve_field(o, nl);
    const ArrayLrc code = ArrayLrc::from(make_tamo_barg_lrc(f, n, kprime, r, rho));
    std::mt19937_64 rng(o.seed + 1);
    const Matrix message = random_matrix(rng, f, kprime, n);
    const Matrix cw = code.encode(message);
    const PatternParams params{n, nl, mu, rho, CorruptionMode::erasures};
    size_t checked = 0;
    bool bad = false;
    LineSet counterexample;
    for (long t = 0; t <= t_max && !bad; ++t) {
      for_each_line_set(2 * n, static_cast<size_t>(t), [&](const std::vector<unsigned>& lines) {
        if (bad) return;
        const LineSet pattern(lines);
        const bool predicted = is_locally_decodable(pattern, params, Construction::cover);
        const auto repair = code.local_repair(cw, pattern);
        const bool repaired = repair.fully_repaired() && repair.repaired == cw;
        ++checked;
        if (predicted != repaired) {
          bad = true;
          counterexample = pattern;
        }
      });
    }
    if (bad) {
      std::cerr << "MISMATCH repair: pattern=" << lineset_to_json(counterexample).dump() << "\n";
      return kExitMismatch;
    }
    std::cout << "ok: predicate matches local repair (" << checked << " patterns, t <= " << t_max << ")\n";
  }

  // 4. global decoders on random patterns
  {
    const Field f = resolve_field(o, nl);
    const ArrayLrc code = ArrayLrc::from(make_tamo_barg_lrc(f, n, kprime, r, rho));
    const size_t d = static_cast<size_t>(lrc_singleton_bound(
        static_cast<long>(n), static_cast<long>(kprime), static_cast<long>(r), static_cast<long>(rho)));
    std::mt19937_64 rng(o.seed + 2);
    const size_t rounds = std::min<size_t>(o.trials, 1000);
    for (size_t trial = 0; trial < rounds; ++trial) {
      const Matrix message = random_matrix(rng, f, kprime, n);
      const Matrix cw = code.encode(message);
      const LineSet pattern = sample_line_set(rng, 2 * n, d - 1);
      auto [rows, cols] = pattern.split(n);
      Matrix corrupted = cw;
      for (size_t rr : rows)
        for (size_t c = 0; c < n; ++c) corrupted(rr, c) = 0;
      for (size_t c : cols)
        for (size_t rr = 0; rr < n; ++rr) corrupted(rr, c) = 0;
      const auto dec = code.decode_erasures(corrupted, pattern);
      if (!dec.ok() || dec.codeword != cw) {
        std::cerr << "MISMATCH erasure decode: pattern=" << lineset_to_json(pattern).dump() << "\n";
        return kExitMismatch;
      }

      Matrix with_errors = cw;
      const LineSet errs = sample_line_set(rng, 2 * n, (d - 1) / 2);
      auto [erows, ecols] = errs.split(n);
      for (size_t rr : erows)
        for (size_t c = 0; c < n; ++c) with_errors(rr, c) = f.add(with_errors(rr, c), random_nonzero(rng, f));
      for (size_t c : ecols)
        for (size_t rr = 0; rr < n; ++rr) with_errors(rr, c) = f.add(with_errors(rr, c), random_nonzero(rng, f));
      const auto edec = code.decode_errors(with_errors);
      if (!edec.ok() || edec.codeword != cw) {
        std::cerr << "MISMATCH error decode: pattern=" << lineset_to_json(errs).dump() << "\n";
        return kExitMismatch;
      }
    }
    std::cout << "ok: global decoders recover seeded patterns (" << rounds << " rounds)\n";
  }

  std::cout << "all checks passed\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locally repairable array codes in the cover metric"};
  app.require_subcommand(1);

  CommonOpts bound_opts, roundtrip_opts, plocal_opts, simulate_opts, verify_opts;
  std::string rt_rows, rt_cols;
  long rt_t = -1;
  bool sim_decode = false;

  CLI::App* bound = app.add_subcommand("bound", "locality Singleton bounds and bound-achieving construction");
  add_common_options(bound, bound_opts);

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "encode, corrupt, repair and decode a seeded word");
  add_common_options(roundtrip, roundtrip_opts);
  roundtrip->add_option("--rows", rt_rows, "1-based rows to corrupt, comma separated");
  roundtrip->add_option("--cols", rt_cols, "1-based columns to corrupt, comma separated");
  roundtrip->add_option("--t", rt_t, "corrupt t random lines instead");

  CLI::App* plocal = app.add_subcommand("plocal", "exact local-decoding probability table (CSV)");
  add_common_options(plocal, plocal_opts);

  CLI::App* simulate = app.add_subcommand("simulate", "seeded Monte Carlo crisscross channel");
  add_common_options(simulate, simulate_opts);
  simulate->add_flag("--decode", sim_decode, "also run the real local repair and cross-check the predicate");

  CLI::App* verify = app.add_subcommand("verify", "run the oracle equivalence suites");
  add_common_options(verify, verify_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitBadConfig;
  }

  try {
    if (bound->parsed()) {
      apply_config(bound, bound_opts);
      return cmd_bound(bound_opts);
    }
    if (roundtrip->parsed()) {
      apply_config(roundtrip, roundtrip_opts);
      return cmd_roundtrip(roundtrip_opts, rt_rows, rt_cols, rt_t);
    }
    if (plocal->parsed()) {
      apply_config(plocal, plocal_opts);
      return cmd_plocal(plocal_opts);
    }
    if (simulate->parsed()) {
      apply_config(simulate, simulate_opts);
      return cmd_simulate(simulate_opts, sim_decode);
    }
    if (verify->parsed()) {
      apply_config(verify, verify_opts);
      return cmd_verify(verify_opts);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  }
  return kExitBadConfig;
}
