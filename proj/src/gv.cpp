#include "gv.hpp"

#include "errors.hpp"
#include "json.hpp"

namespace flopkit::gv {

namespace {

struct TableRow {
  std::vector<long long> bounds;
  long long dim_bound;
  RealizedStatus status;
  std::vector<long long> example;
};

const TableRow& table_row(int ell) {
  static const TableRow rows[6] = {
      {{1}, 1, RealizedStatus::KnownRealized, {}},
      {{4, 1}, 8, RealizedStatus::KnownRealized, {}},
      {{5, 3, 1}, 26, RealizedStatus::OpenWithExample, {6, 3, 1}},
      {{6, 4, 2, 1}, 56, RealizedStatus::OpenWithExample, {6, 5, 2, 1}},
      {{7, 6, 4, 2, 1}, 124, RealizedStatus::OpenWithExample, {8, 6, 4, 2, 1}},
      {{6, 6, 4, 3, 2, 1}, 200, RealizedStatus::KnownRealized, {}},
  };
  if (ell < 1 || ell > 6)
    throw DomainError("length must be between 1 and 6, got " + std::to_string(ell));
  return rows[ell - 1];
}

long long weighted_dim(const std::vector<long long>& bounds) {
  long long s = 0;
  for (std::size_t i = 0; i < bounds.size(); ++i)
    s += static_cast<long long>((i + 1) * (i + 1)) * bounds[i];
  return s;
}

}  // namespace

GvRow gv_row(int ell) {
  const TableRow& row = table_row(ell);
  if (weighted_dim(row.bounds) != row.dim_bound)
    throw InternalError("stored dimension bound disagrees with its recomputation");
  GvRow out;
  out.ell = ell;
  out.gv_lower_bounds = row.bounds;
  out.dim_bound = row.dim_bound;
  out.realized = row.status;
  return out;
}

Realization realized_status(int ell) {
  const TableRow& row = table_row(ell);
  return Realization{row.status, row.example};
}

DeformationReport deformation_equivalents(int ell, int a) {
  table_row(ell);  // validates ell
  if (a < 1 || a > ell)
    throw DomainError("thickening must be between 1 and the length");
  DeformationReport r;
  r.ell = ell;
  r.thickening = a;
  r.exists = 2 * a <= ell;
  r.conditions = {"strict_nc_deformations_exist", "two_a_at_most_ell",
                  "higher_multiple_occurs"};
  return r;
}

std::string table_csv() {
  std::string out = "ell,gv_lower_bounds,dim_lower_bound\n";
  for (int ell = 1; ell <= 6; ++ell) {
    const GvRow row = gv_row(ell);
    out += std::to_string(ell) + ",\"(";
    for (std::size_t i = 0; i < row.gv_lower_bounds.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(row.gv_lower_bounds[i]);
    }
    out += ")\"," + std::to_string(row.dim_bound) + "\n";
  }
  return out;
}

std::string row_json(int ell) {
  const GvRow row = gv_row(ell);
  nlohmann::ordered_json j;
  j["ell"] = row.ell;
  j["gvLowerBounds"] = row.gv_lower_bounds;
  j["dimLowerBound"] = row.dim_bound;
  j["realized"] = row.realized == RealizedStatus::KnownRealized;
  return j.dump();
}

std::string realization_json(int ell) {
  const Realization r = realized_status(ell);
  nlohmann::ordered_json j;
  j["ell"] = ell;
  j["boundRealized"] = r.status == RealizedStatus::KnownRealized;
  if (r.status == RealizedStatus::OpenWithExample) j["smallestKnown"] = r.example;
  return j.dump();
}

std::string deformation_json(const DeformationReport& r) {
  nlohmann::ordered_json j;
  j["ell"] = r.ell;
  j["a"] = r.thickening;
  j["exists"] = r.exists;
  j["equivalentConditions"] = r.conditions;
  return j.dump();
}

}  // namespace flopkit::gv
