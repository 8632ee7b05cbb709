#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "report.hpp"
#include "scholz/ambiguous.hpp"
#include "scholz/error.hpp"
#include "scholz/real_quadratic.hpp"
#include "scholz/sweep.hpp"

using namespace scholz;
using namespace scholz::cli;
using nlohmann::ordered_json;

namespace {

struct Options {
  std::string field = "Q";
  u64 max = 100;
  std::string format = "csv";
  u64 seed = 0;
  int pell_bound = 5;
  int effort = 1;
  std::string cache;
  unsigned jobs = 1;
  bool timing = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RingElement parse_element(const std::string& s) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return RingElement(Integer(s));
    return RingElement(Integer(s.substr(0, comma)), Integer(s.substr(comma + 1)));
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot parse element '" + s + "' (expected x or x,y)");
  }
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {
    if (o.format == "json")
      report_.format = Format::json;
    else if (o.format != "csv")
      throw UsageError("--format must be csv or json");
    report_.timing = o.timing;
    vopts_.effort = o.effort;
    vopts_.units.effort = o.effort;
    vopts_.units.kmax = std::max(vopts_.units.kmin, o.pell_bound);
    if (!o.cache.empty()) {
      cache_ = std::make_unique<FieldCache>(o.cache);
      vopts_.cache = cache_.get();
    }
  }

  const GroundField& field() const {
    try {
      return GroundField::parse(o_.field);
    } catch (const error& e) {
      throw UsageError(e.what());
    }
  }

  void begin(const std::string& command, const std::string& field) {
    if (report_.format == Format::json) std::cout << metadata(command, field, o_.max, o_.seed).dump() << '\n';
  }

  int finish() {
    if (report_.format == Format::json)
      std::cout << summary_json(summary_).dump() << '\n';
    else {
      std::cerr << "pass " << summary_.pass << ", fail " << summary_.fail << ", skipped " << summary_.skipped;
      for (const auto& [k, v] : summary_.skip_reasons) std::cerr << " [" << k << ": " << v << "]";
      std::cerr << '\n';
    }
    return summary_.fail ? 1 : 0;
  }

  template <class Fn>
  std::vector<VerificationRecord> records(const std::vector<PrimePair>& pairs, const std::string& theorem, Fn fn) {
    auto rs = parallel_map(pairs, o_.jobs, [&](const PrimePair& pp) {
      try {
        return fn(pp);
      } catch (const error& e) {
        VerificationRecord r;
        r.theorem = theorem;
        r.field = field_of(pp);
        r.pi1 = pp.pi1;
        r.pi2 = pp.pi2;
        r.p = pp.p;
        r.q = pp.q;
        bool bug = e.code() == errc::internal || e.code() == errc::lift_not_found;
        r.clauses.push_back({"engine", bug ? Verdict::fail : Verdict::skipped, e.what()});
        if (!bug) r.skip_reason = e.what();
        return r;
      }
    });
    for (const auto& r : rs) summary_.add(r.failed(), r.skipped(), r.skip_reason);
    return rs;
  }

  std::vector<CharacterTable> tables(const GroundField& F, const std::vector<PrimePair>& pairs) {
    auto ts = parallel_map(pairs, o_.jobs, [&](const PrimePair& pp) {
      try {
        return x_character(F, pp.pi1, pp.pi2, vopts_);
      } catch (const error& e) {
        CharacterTable t;
        t.field = F.id();
        t.pi1 = pp.pi1;
        t.pi2 = pp.pi2;
        t.p = pp.p;
        t.q = pp.q;
        bool bug = e.code() == errc::internal || e.code() == errc::lift_not_found;
        t.clauses.push_back({"engine", bug ? Verdict::fail : Verdict::skipped, e.what()});
        t.skip_reason = e.what();
        return t;
      }
    });
    for (const auto& t : ts) summary_.add(t.failed(), !t.certified, t.skip_reason);
    return ts;
  }

  std::vector<PrimePair> admissible(const GroundField& F) const {
    std::vector<PrimePair> out;
    for (const auto& pp : prime_pairs(F, o_.max))
      if (x_admissible(F, pp.pi1, pp.pi2)) out.push_back(pp);
    return out;
  }

  std::vector<PrimePair> srl_pairs(const GroundField& F) const {
    std::vector<PrimePair> out;
    for (const auto& pp : prime_pairs(F, o_.max))
      if (pp.p % 8 == 1 && pp.q % 8 == 1 && F.is_two_primary(pp.pi1) && F.is_two_primary(pp.pi2)) out.push_back(pp);
    return out;
  }

  std::vector<PrimePair> tsrc_pairs() const {
    std::vector<PrimePair> out;
    auto ps = primes_up_to(o_.max);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        if (ps[i] > 2 && ps[i] % 4 == ps[j] % 4)
          out.push_back({RingElement(Integer(static_cast<unsigned long>(ps[i]))),
                         RingElement(Integer(static_cast<unsigned long>(ps[j]))), ps[i], ps[j]});
    return out;
  }

  const Options& o_;
  ReportOptions report_;
  VerifyOptions vopts_;
  Summary summary_;
  std::unique_ptr<FieldCache> cache_;

 private:
  FieldId field_of(const PrimePair&) const { return field().id(); }
};

// --- single-object commands ------------------------------------------------

void emit(const Runner& R, const ordered_json& j) {
  if (R.report_.format == Format::json) {
    std::cout << j.dump() << '\n';
    return;
  }
  std::string header, row;
  bool first = true;
  for (const auto& [k, v] : j.items()) {
    if (!first) {
      header += ',';
      row += ',';
    }
    first = false;
    header += k;
    std::string s = v.is_string() ? v.get<std::string>() : v.is_null() ? "" : v.dump();
    if (s.find_first_of(",\"") != std::string::npos) {
      std::string t = "\"";
      for (char c : s) t += c == '"' ? std::string("\"\"") : std::string(1, c);
      s = t + '"';
    }
    row += s;
  }
  std::cout << header << '\n' << row << '\n';
}

int cmd_symbol(Runner& R, const std::string& a_text, const std::string& b_text) {
  const GroundField& F = R.field();
  RingElement a = parse_element(a_text), b = parse_element(b_text);
  PrimePlace P = place_of(F, b);
  ordered_json j;
  j["schema"] = 1;
  j["field"] = std::string(F.name());
  j["a"] = to_string(a);
  j["b"] = to_string(b);
  Sign s = quad_symbol(F, a, P);
  j["quadratic"] = to_int(s);
  j["quartic"] = nullptr;
  j["eps_symbol"] = nullptr;
  if (s == Sign::plus && F.is_primary(a) && F.is_primary(b)) {
    try {
      j["quartic"] = to_int(quartic_primary(F, a, b));
    } catch (const error&) {
    }
  }
  if (F.rational() && s == Sign::plus && a.x > 0 && a.x.fits_ulong_p() && b.x > 0 && b.x.fits_ulong_p()) {
    try {
      j["eps_symbol"] = to_int(eps_symbol(a.x.get_ui(), b.x.get_ui()));
    } catch (const error&) {
    }
  }
  emit(R, j);
  return 0;
}

int cmd_unit(Runner& R, const std::string& mu_text) {
  const GroundField& F = R.field();
  auto K = RelQuadField::build(F, parse_element(mu_text));
  ordered_json j;
  j["schema"] = 1;
  j["field"] = K.label();
  j["discriminant"] = K.absolute_discriminant().get_str();
  auto [z, w] = torsion_of(K);
  j["torsion_generator"] = K.to_string(z);
  j["torsion_order"] = w;
  j["eta"] = nullptr;
  j["eta_norm"] = nullptr;
  j["regulator"] = nullptr;
  j["method"] = nullptr;
  j["certified"] = K.unit_rank() == 0;
  if (K.unit_rank() == 1) {
    UnitResult U = unit_search(K, R.vopts_.units);
    j["eta"] = K.to_string(*U.eta);
    j["eta_norm"] = to_string(U.eta_norm);
    j["regulator"] = static_cast<double>(U.regulator);
    j["method"] = U.method;
    j["certified"] = U.odd_index_certified;
  }
  emit(R, j);
  return 0;
}

int cmd_classgroup(Runner& R, const std::string& mu_text) {
  const GroundField& F = R.field();
  auto K = RelQuadField::build(F, parse_element(mu_text));
  std::optional<UnitResult> U;
  if (K.unit_rank() == 1) U = unit_search(K, R.vopts_.units);
  ClassGroupResult C = class_group(K, R.o_.effort, U ? &*U : nullptr);
  ordered_json j;
  j["schema"] = 1;
  j["field"] = K.label();
  j["discriminant"] = K.absolute_discriminant().get_str();
  std::string inv;
  for (const auto& d : C.invariant_factors) inv += (inv.empty() ? "" : " ") + d.get_str();
  j["invariant_factors"] = inv;
  j["h"] = C.h.get_str();
  j["analytic_ratio"] = C.analytic_ratio;
  j["certified"] = C.certified;
  j["reason"] = C.reason;
  try {
    AmbiguousReport A = ambiguous_counts(K, C, U ? &*U : nullptr);
    j["am_formula"] = A.am_formula;
    j["am_st_formula"] = A.am_st_formula;
    j["am_direct"] = A.am_direct ? ordered_json(*A.am_direct) : ordered_json(nullptr);
    j["am_st_direct"] = A.am_st_direct ? ordered_json(*A.am_st_direct) : ordered_json(nullptr);
  } catch (const error& e) {
    j["am_formula"] = nullptr;
    j["am_st_formula"] = nullptr;
    j["am_direct"] = nullptr;
    j["am_st_direct"] = nullptr;
  }
  emit(R, j);
  return 0;
}

// --- sweeps ------------------------------------------------------------------

int cmd_tsrc(Runner& R) {
  R.begin("verify-tsrc", "Q");
  auto rs = R.records(R.tsrc_pairs(), "tsrc", [](const PrimePair& pp) { return verify_tsrc(pp.p, pp.q); });
  write_records(std::cout, rs, R.report_);
  return R.finish();
}

int cmd_tmain(Runner& R) {
  const GroundField& F = R.field();
  R.begin("verify-tmain", std::string(F.name()));
  auto rs = R.records(prime_pairs(F, R.o_.max), "tmain",
                      [&](const PrimePair& pp) { return verify_tmain(F, pp.pi1, pp.pi2, R.vopts_); });
  write_records(std::cout, rs, R.report_);
  return R.finish();
}

int cmd_srl(Runner& R, FieldId id) {
  const GroundField& F = GroundField::get(id);
  const bool gauss = id == FieldId::Qi;
  R.begin(gauss ? "verify-srli" : "verify-srl2", std::string(F.name()));
  auto rs = R.records(R.srl_pairs(F), gauss ? "srli" : "srl2", [&](const PrimePair& pp) {
    return gauss ? verify_srli(pp.pi1, pp.pi2, R.vopts_) : verify_srl2(pp.pi1, pp.pi2, R.vopts_);
  });
  write_records(std::cout, rs, R.report_);
  return R.finish();
}

int cmd_xchar(Runner& R) {
  const GroundField& F = R.field();
  R.begin("x-char", std::string(F.name()));
  write_tables(std::cout, R.tables(F, R.admissible(F)), R.report_);
  return R.finish();
}

int cmd_scan(Runner& R, const std::vector<std::string>& fields) {
  R.begin("scan-conjecture", "");
  std::vector<ConjectureRow> rows;
  for (const auto& name : fields) {
    const GroundField* F;
    try {
      F = &GroundField::parse(name);
    } catch (const error& e) {
      throw UsageError(e.what());
    }
    auto part = parallel_map(R.admissible(*F), R.o_.jobs,
                             [&](const PrimePair& pp) { return conjecture_row(*F, pp.pi1, pp.pi2, R.vopts_); });
    for (auto& row : part) {
      // evidence only: skips are counted, mismatches are not failures
      R.summary_.add(false, !row.x_minus_one, row.skip_reason);
      rows.push_back(std::move(row));
    }
  }
  write_rows(std::cout, rows, R.report_);
  return R.finish();
}

int cmd_sweep(Runner& R, std::vector<std::string> only) {
  const GroundField& F = R.field();
  if (only.empty()) {
    only = {"tmain", "xchar"};
    if (F.rational()) only.insert(only.begin(), "tsrc");
    if (F.id() == FieldId::Qi || F.id() == FieldId::Qsqrt_2) only.insert(only.begin() + 1, "srl");
  }
  R.begin("sweep", std::string(F.name()));
  std::vector<VerificationRecord> rs;
  std::vector<CharacterTable> ts;
  for (const auto& what : only) {
    std::vector<VerificationRecord> part;
    if (what == "tsrc") {
      if (!F.rational()) throw UsageError("tsrc needs --field Q");
      part = R.records(R.tsrc_pairs(), "tsrc", [](const PrimePair& pp) { return verify_tsrc(pp.p, pp.q); });
    } else if (what == "tmain") {
      part = R.records(prime_pairs(F, R.o_.max), "tmain",
                       [&](const PrimePair& pp) { return verify_tmain(F, pp.pi1, pp.pi2, R.vopts_); });
    } else if (what == "srl") {
      if (F.id() != FieldId::Qi && F.id() != FieldId::Qsqrt_2) throw UsageError("srl needs --field Qi or Qsqrt-2");
      part = R.records(R.srl_pairs(F), F.id() == FieldId::Qi ? "srli" : "srl2", [&](const PrimePair& pp) {
        return F.id() == FieldId::Qi ? verify_srli(pp.pi1, pp.pi2, R.vopts_) : verify_srl2(pp.pi1, pp.pi2, R.vopts_);
      });
    } else if (what == "xchar") {
      ts = R.tables(F, R.admissible(F));
      continue;
    } else {
      throw UsageError("unknown --only entry '" + what + "' (tsrc, tmain, srl, xchar)");
    }
    rs.insert(rs.end(), part.begin(), part.end());
  }
  write_records(std::cout, rs, R.report_);
  if (!ts.empty()) {
    if (R.report_.format == Format::csv) std::cout << '\n';
    write_tables(std::cout, ts, R.report_);
  }
  return R.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scholz: residue symbols, units and class groups of quadratic extensions, and reciprocity sweeps"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("SCHOLZ_CACHE")) o.cache = env;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "ground field: Q, Qi, Qsqrt-2, Qsqrt-3, Qsqrt-7, Qsqrt-11")->capture_default_str();
    sub->add_option("--max", o.max, "largest prime norm in a sweep")->capture_default_str();
    sub->add_option("--format", o.format, "csv or json")->capture_default_str();
    sub->add_option("--seed", o.seed, "recorded in report metadata")->capture_default_str();
    sub->add_option("--pell-bound", o.pell_bound, "largest box exponent k (2^k) of the unit search")->capture_default_str();
    sub->add_option("--effort", o.effort, "relation search effort")->capture_default_str()->check(CLI::Range(1, 16));
    sub->add_option("--cache", o.cache, "flat cache file (default $SCHOLZ_CACHE)");
    sub->add_option("--jobs", o.jobs, "worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
    sub->add_flag("--timing", o.timing, "add per-record seconds (breaks byte-identical output)");
    return sub;
  };

  std::string a, b;
  std::vector<std::string> scan_fields{"Qsqrt-3", "Qsqrt-7", "Qsqrt-11"}, only;
  auto* symbol = common(app.add_subcommand("symbol", "residue symbols [a/b], (a/b)_4 and (eps_a/b)"));
  symbol->add_option("a", a, "element x or x,y")->required();
  symbol->add_option("b", b, "prime element x or x,y")->required();
  auto* unit = common(app.add_subcommand("unit", "unit group of F(sqrt mu)"));
  unit->add_option("mu", a, "radicand x or x,y")->required();
  auto* classgroup = common(app.add_subcommand("classgroup", "class group and ambiguous classes of F(sqrt mu)"));
  classgroup->add_option("mu", a, "radicand x or x,y")->required();
  auto* tsrc = common(app.add_subcommand("verify-tsrc", "classical Scholz theorem over Q for p < q <= max"));
  auto* tmain = common(app.add_subcommand("verify-tmain", "main theorem over the chosen ground field"));
  auto* srli = common(app.add_subcommand("verify-srli", "Scholz reciprocity over Z[i]"));
  auto* srl2 = common(app.add_subcommand("verify-srl2", "Scholz reciprocity over Z[sqrt(-2)]"));
  auto* xchar = common(app.add_subcommand("x-char", "the character X on the units of F"));
  auto* scan = common(app.add_subcommand("scan-conjecture", "X(-1) against (pi1/pi2)_4 (pi2/pi1)_4, never asserted"));
  scan->add_option("--fields", scan_fields, "ground fields to scan")->delimiter(',')->capture_default_str();
  auto* sweep = common(app.add_subcommand("sweep", "every applicable verifier over one field"));
  sweep->add_option("--only", only, "subset of tsrc, tmain, srl, xchar")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Runner R(o);
    if (*symbol) return cmd_symbol(R, a, b);
    if (*unit) return cmd_unit(R, a);
    if (*classgroup) return cmd_classgroup(R, a);
    if (*tsrc) return cmd_tsrc(R);
    if (*tmain) return cmd_tmain(R);
    if (*srli) return cmd_srl(R, FieldId::Qi);
    if (*srl2) return cmd_srl(R, FieldId::Qsqrt_2);
    if (*xchar) return cmd_xchar(R);
    if (*scan) return cmd_scan(R, scan_fields);
    if (*sweep) return cmd_sweep(R, only);
  } catch (const UsageError& e) {
    std::cerr << "scholz: " << e.what() << '\n';
    return 2;
  } catch (const error& e) {
    std::cerr << "scholz: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
