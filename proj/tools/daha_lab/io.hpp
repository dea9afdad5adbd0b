#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dahalab/daha.hpp"
#include "dahalab/periodic.hpp"
#include "dahalab/schur_weyl.hpp"
#include "dahalab/verify.hpp"

namespace dahalab::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "dahalab/1";

enum class Format { Json, Csv, Pretty };
Format parse_format(const std::string& s);

Json rational(const Rational& r);
Json rationals(const std::vector<Rational>& v);
Json field(const FieldElement& x);
Json weight(const Weight& w);

/// {flavor, base, steps, weights}
Json walk_record(const LoopedWalk& u);
/// {lambda, principal_label, rows, diag}
Json tableau_record(const SkewTableau& T);
/// GL: {flavor, window, diag, weight_exponents}
Json periodic_record(const PeriodicTableau& P);
/// SL: {flavor, lambda, tableau, diag, weight_exponents}
Json periodic_record(const PeriodicClass& C);

Json relation_failure_record(const RelationReport& rep, const RelationFailure& f);
Json check_report(const CheckReport& rep);

/// Parses {"lambda": [...], "rows": [[...], ...]} (flavor taken from the
/// argument). Throws std::invalid_argument on malformed input.
SkewTableau tableau_from_json(const Json& j, Flavor flavor, int k);

/// Collects records and writes them in one of the three formats.
class Emitter {
 public:
  Emitter(Format format, std::string command, Json config);

  void record(Json r) { records_.push_back(std::move(r)); }
  void summary(const std::string& key, Json value) { summary_[key] = std::move(value); }
  std::size_t size() const { return records_.size(); }

  void write(std::ostream& os) const;

 private:
  Format format_;
  std::string command_;
  Json config_;
  std::vector<Json> records_;
  Json summary_ = Json::object();
};

}  // namespace dahalab::io
