#pragma once

#include <string>
#include <vector>

namespace flopkit::gv {

enum class RealizedStatus { KnownRealized, OpenWithExample };

// Lower bounds on the curve-counting invariants n_1 .. n_ell of a length-ell
// contraction, together with the induced lower bound sum i^2 n_i on the
// dimension of the contraction algebra.
struct GvRow {
  int ell = 0;
  std::vector<long long> gv_lower_bounds;
  long long dim_bound = 0;
  RealizedStatus realized = RealizedStatus::KnownRealized;
};

GvRow gv_row(int ell);

// Whether the bound tuple itself is known to occur: lengths 1, 2 and 6 are
// realized on the nose; for 3, 4 and 5 the smallest known tuples are stored.
struct Realization {
  RealizedStatus status = RealizedStatus::KnownRealized;
  std::vector<long long> example;  // empty when the bound itself is realized
};

Realization realized_status(int ell);

// The three equivalent ways of saying a thickened curve moves: strictly
// noncommutative deformations of OC(a) exist, 2a <= ell, and the higher
// multiple 2a shows up among the fibre thickenings.
struct DeformationReport {
  int ell = 0;
  int thickening = 0;
  bool exists = false;
  std::vector<std::string> conditions;
};

DeformationReport deformation_equivalents(int ell, int a);

std::string table_csv();
std::string row_json(int ell);
std::string realization_json(int ell);
std::string deformation_json(const DeformationReport& r);

}  // namespace flopkit::gv
