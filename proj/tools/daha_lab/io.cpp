#include "daha_lab/io.hpp"

#include <ostream>
#include <stdexcept>

namespace dahalab::io {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "pretty") return Format::Pretty;
  throw std::invalid_argument("unknown output format '" + s + "'");
}

Json rational(const Rational& r) {
  return r.get_str();
}

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(rational(r));
  return a;
}

Json field(const FieldElement& x) {
  return x.to_string();
}

Json weight(const Weight& w) {
  return w.coords();
}

Json walk_record(const LoopedWalk& u) {
  Json j;
  j["flavor"] = to_string(u.flavor());
  j["base"] = weight(u.base);
  j["steps"] = u.steps;
  Json w = Json::array();
  for (const auto& d : walk_diagonals(u)) w.push_back(rational(2 * d));
  j["weights"] = w;
  return j;
}

Json tableau_record(const SkewTableau& T) {
  Json j;
  j["lambda"] = weight(T.shape().lambda);
  j["principal_label"] = rational(T.shape().principal_label());
  j["rows"] = T.rows();
  j["diag"] = rationals(T.diag_vector());
  return j;
}

Json periodic_record(const PeriodicTableau& P) {
  Json j;
  j["flavor"] = "gl";
  j["window"] = P.window();
  std::vector<Rational> d;
  for (int i = 1; i <= P.n(); ++i) d.push_back(P.diag(i));
  j["diag"] = rationals(d);
  j["weight_exponents"] = rationals(P.weight_exponents());
  return j;
}

Json periodic_record(const PeriodicClass& C) {
  Json j;
  j["flavor"] = "sl";
  j["lambda"] = weight(C.lambda());
  j["tableau"] = C.tableau.rows();
  std::vector<Rational> d;
  for (int i = 1; i <= C.n(); ++i) d.push_back(sl_diag(C, i));
  j["diag"] = rationals(d);
  j["weight_exponents"] = rationals(sl_weight_exponents(C));
  return j;
}

Json relation_failure_record(const RelationReport& rep, const RelationFailure& f) {
  Json j;
  j["flavor"] = to_string(rep.flavor);
  j["N"] = rep.N;
  j["k"] = rep.k;
  j["relation_id"] = f.relation_id;
  j["basis_index"] = f.basis.to_string();
  j["status"] = "fail";
  j["lhs"] = f.lhs;
  j["rhs"] = f.rhs;
  return j;
}

Json check_report(const CheckReport& rep) {
  Json j;
  j["name"] = rep.name;
  j["checked"] = rep.checked;
  j["failures"] = rep.failures.size();
  j["status"] = rep.ok() ? "pass" : "fail";
  return j;
}

SkewTableau tableau_from_json(const Json& j, Flavor flavor, int k) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("rows"))
    throw std::invalid_argument("tableau record needs 'lambda' and 'rows'");
  std::vector<int> lambda;
  std::vector<std::vector<int>> rows;
  try {
    lambda = j.at("lambda").get<std::vector<int>>();
    rows = j.at("rows").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed tableau record: ") + e.what());
  }
  Weight w(flavor, lambda);
  if (!w.dominant()) throw std::invalid_argument("lambda " + w.to_string() + " is not dominant");
  return SkewTableau(SkewShape{w, k}, std::move(rows));
}

Emitter::Emitter(Format format, std::string command, Json config)
    : format_(format), command_(std::move(command)), config_(std::move(config)) {}

namespace {

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string pretty_value(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

void Emitter::write(std::ostream& os) const {
  switch (format_) {
    case Format::Json: {
      Json doc;
      doc["schema"] = kSchema;
      doc["command"] = command_;
      doc["config"] = config_;
      doc["records"] = records_;
      doc["summary"] = summary_;
      os << doc.dump(2) << '\n';
      return;
    }
    case Format::Csv: {
      if (records_.empty()) return;
      std::vector<std::string> cols;
      for (const auto& [key, _] : records_.front().items()) cols.push_back(key);
      for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
      os << '\n';
      for (const auto& r : records_) {
        for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << (r.contains(cols[c]) ? csv_cell(r[cols[c]]) : "");
        os << '\n';
      }
      return;
    }
    case Format::Pretty: {
      for (const auto& r : records_) {
        bool first = true;
        for (const auto& [key, v] : r.items()) {
          os << (first ? "" : "  ") << key << '=' << pretty_value(v);
          first = false;
        }
        os << '\n';
      }
      for (const auto& [key, v] : summary_.items()) os << "# " << key << ": " << pretty_value(v) << '\n';
      return;
    }
  }
}

}  // namespace dahalab::io
