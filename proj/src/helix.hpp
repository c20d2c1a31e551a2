#pragma once

#include <string>
#include <vector>

namespace flopkit::helix {

enum class SheafKind { OC, OmegaC, Z, ZOmega };

// A formal simple object: the structure sheaf OC(a) of the a-th thickening of
// the curve, its dualizing counterpart omegaC(a), or the length-respecting
// extension sheaf Z / its dual Zomega (the two extra simples that appear for
// lengths 5 and 6).  Each carries a twist by O(twist) and a homological
// shift.
struct SheafSymbol {
  SheafKind kind = SheafKind::OC;
  int thickening = 0;   // the a in OC(a) / omegaC(a); unused for Z / Zomega
  long long twist = 0;
  long long shift = 0;
  bool operator==(const SheafSymbol&) const = default;
};

// omegaC(2) is a twist of OC(2); this rewrites it to the OC(2) form.  Every
// other symbol is already canonical.
SheafSymbol canonical(const SheafSymbol& s);
bool symbols_equal(const SheafSymbol& a, const SheafSymbol& b);

// Number of simples per unit twist for a length-ell curve: 1, 2, 4, 6, 10, 12.
int period_count(int ell);

// S_0 .. S_{N-1}; the infinite family is S_{i+N} = S_i twisted by O(1).
std::vector<SheafSymbol> base_helix(int ell);
SheafSymbol helix_entry(int ell, long long i);

// The t-th heart: simples S_{t-1}[1] and S_t, with bookkeeping tokens for the
// progenerator summands and the deformation algebra presenting it.
struct Heart {
  long long index = 0;
  SheafSymbol first_simple;
  SheafSymbol second_simple;
  std::vector<std::string> progenerator_tokens;
  std::string deformation_algebra_token;
};

Heart heart(int ell, long long t);

// dim Ext^1(OC(2), OC(3)) for length ell in 3..6: zero exactly when ell <= 4.
int ext1_dimension(int ell);

// Derived dual, defined for the symbols whose dual stays in the family:
// Z <-> Zomega (picking up a shift) and OC(2) <-> omegaC(2).
SheafSymbol dual(const SheafSymbol& s);

std::string symbol_text(const SheafSymbol& s);
std::string symbol_json(const SheafSymbol& s);
SheafSymbol symbol_from_json(const std::string& text);
std::string heart_json(const Heart& h);

}  // namespace flopkit::helix
