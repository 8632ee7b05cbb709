#include "report.hpp"

#include <sstream>

namespace scholz::cli {

using nlohmann::ordered_json;

namespace {

std::string sym(const std::optional<Sign>& s) { return s ? (*s == Sign::plus ? "1" : "-1") : ""; }
ordered_json sym_json(const std::optional<Sign>& s) { return s ? ordered_json(to_int(*s)) : ordered_json(nullptr); }

std::string field_name(FieldId id) { return std::string(GroundField::get(id).name()); }

std::string mod_str(const std::optional<Integer>& h, long m) {
  if (!h) return "";
  Integer r = *h % m;
  if (r < 0) r += m;
  return r.get_str();
}

std::string status_of(bool failed, bool skipped) { return failed ? "fail" : skipped ? "skipped" : "pass"; }

std::string verdicts(const std::vector<Clause>& cs) {
  std::string out;
  for (const auto& c : cs) {
    if (!out.empty()) out += ';';
    out += c.name + ':' + std::string(to_string(c.verdict));
  }
  return out;
}

ordered_json clauses_json(const std::vector<Clause>& cs) {
  ordered_json a = ordered_json::array();
  for (const auto& c : cs) {
    ordered_json j{{"name", c.name}, {"verdict", to_string(c.verdict)}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    a.push_back(j);
  }
  return a;
}

// CSV field quoting (fields with separators or quotes)
std::string q(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + '"';
}

}  // namespace

void Summary::add(bool failed, bool skip, const std::string& reason) {
  if (failed)
    ++fail;
  else if (skip) {
    ++skipped;
    std::string key = reason.substr(0, reason.find(':'));
    ++skip_reasons[key.empty() ? "unspecified" : key];
  } else
    ++pass;
}

ordered_json to_json(const VerificationRecord& r, bool timing) {
  ordered_json j;
  j["schema"] = 1;
  j["theorem"] = r.theorem;
  j["field"] = field_name(r.field);
  j["pi1"] = to_string(r.pi1);
  j["pi2"] = to_string(r.pi2);
  j["p"] = r.p;
  j["q"] = r.q;
  j["case"] = r.case_label;
  j["legendre"] = sym_json(r.legendre);
  j["e1_p2"] = sym_json(r.e1_p2);
  j["e2_p1"] = sym_json(r.e2_p1);
  j["ef_p1"] = sym_json(r.ef_p1);
  j["ef_p2"] = sym_json(r.ef_p2);
  j["quartic12"] = sym_json(r.quartic12);
  j["quartic21"] = sym_json(r.quartic21);
  j["h"] = r.h ? ordered_json(r.h->get_str()) : ordered_json(nullptr);
  j["h_mod4"] = r.h ? ordered_json(mod_str(r.h, 4)) : ordered_json(nullptr);
  j["h_mod8"] = r.h ? ordered_json(mod_str(r.h, 8)) : ordered_json(nullptr);
  j["h_plus"] = r.h_plus ? ordered_json(r.h_plus->get_str()) : ordered_json(nullptr);
  j["unit_norm"] = r.unit_norm ? ordered_json(to_string(*r.unit_norm)) : ordered_json(nullptr);
  j["unit_norm_index"] = r.unit_norm_index ? ordered_json(*r.unit_norm_index) : ordered_json(nullptr);
  j["clauses"] = clauses_json(r.clauses);
  j["status"] = status_of(r.failed(), r.skipped());
  j["units_certified"] = r.units_certified;
  j["classes_certified"] = r.classes_certified;
  j["skip_reason"] = r.skip_reason;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

ordered_json to_json(const CharacterTable& t) {
  ordered_json j;
  j["schema"] = 1;
  j["field"] = field_name(t.field);
  j["pi1"] = to_string(t.pi1);
  j["pi2"] = to_string(t.pi2);
  j["p"] = t.p;
  j["q"] = t.q;
  ordered_json es = ordered_json::array();
  for (const auto& e : t.entries)
    es.push_back({{"unit", "zeta^" + std::to_string(e.unit_index)},
                  {"x1", sym_json(e.x1)},
                  {"x2", sym_json(e.x2)},
                  {"eta1", e.eta1},
                  {"eta2", e.eta2},
                  {"norm_lemma", e.norm_lemma}});
  j["entries"] = es;
  j["agreement"] = t.agreement;
  j["trivial_on_norms"] = t.trivial_on_norms;
  j["x_generator"] = sym_json(t.x_generator);
  j["x_minus_one"] = sym_json(t.x_minus_one);
  j["quartic_product"] = sym_json(t.quartic_product);
  j["clauses"] = clauses_json(t.clauses);
  j["status"] = status_of(t.failed(), !t.certified);
  j["certified"] = t.certified;
  j["skip_reason"] = t.skip_reason;
  return j;
}

ordered_json to_json(const ConjectureRow& r) {
  ordered_json j;
  j["schema"] = 1;
  j["field"] = field_name(r.field);
  j["pi1"] = to_string(r.pi1);
  j["pi2"] = to_string(r.pi2);
  j["p"] = r.p;
  j["q"] = r.q;
  j["x_minus_one"] = sym_json(r.x_minus_one);
  j["quartic_product"] = sym_json(r.quartic_product);
  j["match"] = r.x_minus_one && r.quartic_product ? ordered_json(r.match()) : ordered_json(nullptr);
  j["skip_reason"] = r.skip_reason;
  return j;
}

void write_records(std::ostream& os, const std::vector<VerificationRecord>& rs, const ReportOptions& o) {
  if (o.format == Format::json) {
    for (const auto& r : rs) os << to_json(r, o.timing).dump() << '\n';
    return;
  }
  os << "theorem,field,pi1,pi2,p,q,case,legendre,e1_p2,e2_p1,ef_p1,ef_p2,quartic12,quartic21,h,h_mod4,h_mod8,"
        "h_plus,unit_norm,unit_norm_index,clauses,status,units_certified,classes_certified,skip_reason";
  if (o.timing) os << ",seconds";
  os << '\n';
  for (const auto& r : rs) {
    os << r.theorem << ',' << field_name(r.field) << ',' << q(to_string(r.pi1)) << ',' << q(to_string(r.pi2)) << ','
       << r.p << ',' << r.q << ',' << r.case_label << ',' << sym(r.legendre) << ',' << sym(r.e1_p2) << ','
       << sym(r.e2_p1) << ',' << sym(r.ef_p1) << ',' << sym(r.ef_p2) << ',' << sym(r.quartic12) << ','
       << sym(r.quartic21) << ',' << (r.h ? r.h->get_str() : "") << ',' << mod_str(r.h, 4) << ','
       << mod_str(r.h, 8) << ',' << (r.h_plus ? r.h_plus->get_str() : "") << ','
       << (r.unit_norm ? q(to_string(*r.unit_norm)) : "") << ','
       << (r.unit_norm_index ? std::to_string(*r.unit_norm_index) : "") << ',' << q(verdicts(r.clauses)) << ','
       << status_of(r.failed(), r.skipped()) << ',' << r.units_certified << ',' << r.classes_certified << ','
       << q(r.skip_reason);
    if (o.timing) os << ',' << r.seconds;
    os << '\n';
  }
}

void write_tables(std::ostream& os, const std::vector<CharacterTable>& ts, const ReportOptions& o) {
  if (o.format == Format::json) {
    for (const auto& t : ts) os << to_json(t).dump() << '\n';
    return;
  }
  os << "field,pi1,pi2,p,q,entries,agreement,trivial_on_norms,x_generator,x_minus_one,quartic_product,clauses,status,"
        "skip_reason\n";
  for (const auto& t : ts) {
    std::string es;
    for (const auto& e : t.entries) {
      if (!es.empty()) es += ';';
      es += "zeta^" + std::to_string(e.unit_index) + ":" + sym(e.x1) + "/" + sym(e.x2);
    }
    os << field_name(t.field) << ',' << q(to_string(t.pi1)) << ',' << q(to_string(t.pi2)) << ',' << t.p << ','
       << t.q << ',' << q(es) << ',' << t.agreement << ',' << t.trivial_on_norms << ',' << sym(t.x_generator) << ','
       << sym(t.x_minus_one) << ',' << sym(t.quartic_product) << ',' << q(verdicts(t.clauses)) << ','
       << status_of(t.failed(), !t.certified) << ',' << q(t.skip_reason) << '\n';
  }
}

void write_rows(std::ostream& os, const std::vector<ConjectureRow>& rows, const ReportOptions& o) {
  if (o.format == Format::json) {
    for (const auto& r : rows) os << to_json(r).dump() << '\n';
    return;
  }
  os << "field,pi1,pi2,p,q,x_minus_one,quartic_product,match,skip_reason\n";
  for (const auto& r : rows)
    os << field_name(r.field) << ',' << q(to_string(r.pi1)) << ',' << q(to_string(r.pi2)) << ',' << r.p << ','
       << r.q << ',' << sym(r.x_minus_one) << ',' << sym(r.quartic_product) << ','
       << (r.x_minus_one && r.quartic_product ? (r.match() ? "1" : "0") : "") << ',' << q(r.skip_reason) << '\n';
}

ordered_json metadata(const std::string& command, const std::string& field, u64 max, u64 seed) {
  ordered_json j;
  j["schema"] = 1;
  j["kind"] = "metadata";
  j["command"] = command;
  j["field"] = field;
  j["max"] = max;
  j["seed"] = seed;
  j["engine_version"] = kEngineVersion;
  j["readings"] = {"strong form: 8 | h+ (narrow class number divisible by 8)"};
  return j;
}

ordered_json summary_json(const Summary& s) {
  ordered_json j;
  j["schema"] = 1;
  j["kind"] = "summary";
  j["pass"] = s.pass;
  j["fail"] = s.fail;
  j["skipped"] = s.skipped;
  j["skip_reasons"] = s.skip_reasons;
  return j;
}

}  // namespace scholz::cli
