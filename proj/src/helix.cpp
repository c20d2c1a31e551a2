#include "helix.hpp"

#include "errors.hpp"
#include "json.hpp"

namespace flopkit::helix {

namespace {

void check_ell(int ell) {
  if (ell < 1 || ell > 6)
    throw DomainError("length must be between 1 and 6, got " + std::to_string(ell));
}

std::string kind_name(SheafKind k) {
  switch (k) {
    case SheafKind::OC: return "OC";
    case SheafKind::OmegaC: return "omegaC";
    case SheafKind::Z: return "Z";
    case SheafKind::ZOmega: return "Zomega";
  }
  throw InternalError("unhandled sheaf kind");
}

}  // namespace

SheafSymbol canonical(const SheafSymbol& s) {
  if (s.kind == SheafKind::OmegaC && s.thickening == 2)
    return SheafSymbol{SheafKind::OC, 2, s.twist - 1, s.shift};
  return s;
}

bool symbols_equal(const SheafSymbol& a, const SheafSymbol& b) {
  return canonical(a) == canonical(b);
}

int period_count(int ell) {
  check_ell(ell);
  return static_cast<int>(base_helix(ell).size());
}

std::vector<SheafSymbol> base_helix(int ell) {
  check_ell(ell);
  std::vector<SheafSymbol> v;
  v.push_back({SheafKind::OC, 1, -1, 0});
  for (int a = ell; a >= 3; --a) v.push_back({SheafKind::OC, a, 0, 0});
  if (ell >= 5) v.push_back({SheafKind::Z, 0, 0, 0});
  if (ell >= 2) v.push_back({SheafKind::OC, 2, 0, 0});
  if (ell >= 5) v.push_back({SheafKind::ZOmega, 0, 1, 0});
  for (int a = 3; a <= ell; ++a) v.push_back({SheafKind::OmegaC, a, 1, 0});
  return v;
}

SheafSymbol helix_entry(int ell, long long i) {
  const auto base = base_helix(ell);
  const long long n = static_cast<long long>(base.size());
  long long q = i / n, r = i % n;
  if (r < 0) {
    r += n;
    --q;
  }
  SheafSymbol s = base[static_cast<std::size_t>(r)];
  s.twist += q;
  return s;
}

Heart heart(int ell, long long t) {
  check_ell(ell);
  Heart h;
  h.index = t;
  h.first_simple = helix_entry(ell, t - 1);
  h.first_simple.shift += 1;
  h.second_simple = helix_entry(ell, t);
  h.progenerator_tokens = {"V(" + std::to_string(t - 1) + ")",
                           "V(" + std::to_string(t) + ")"};
  h.deformation_algebra_token = "Lambda_def(" + std::to_string(t) + ")";
  return h;
}

int ext1_dimension(int ell) {
  if (ell < 3 || ell > 6)
    throw DomainError("thickenings 2 and 3 both exist only for lengths 3 to 6");
  return ell <= 4 ? 0 : 1;
}

SheafSymbol dual(const SheafSymbol& s) {
  switch (s.kind) {
    case SheafKind::Z:
      return {SheafKind::ZOmega, 0, s.twist, 1 - s.shift};
    case SheafKind::ZOmega:
      return {SheafKind::Z, 0, s.twist, 1 - s.shift};
    case SheafKind::OC:
      if (s.thickening == 2) return {SheafKind::OmegaC, 2, s.twist, -s.shift};
      break;
    case SheafKind::OmegaC:
      if (s.thickening == 2) return {SheafKind::OC, 2, s.twist - 1, -s.shift};
      break;
  }
  throw DomainError("dual is only available for Z, Zomega, OC(2) and omegaC(2)");
}

std::string symbol_text(const SheafSymbol& s) {
  std::string out = kind_name(s.kind);
  if (s.kind == SheafKind::OC || s.kind == SheafKind::OmegaC)
    out += "(" + std::to_string(s.thickening) + ")";
  if (s.twist != 0) out += "*O(" + std::to_string(s.twist) + ")";
  if (s.shift != 0) out += "[" + std::to_string(s.shift) + "]";
  return out;
}

std::string symbol_json(const SheafSymbol& s) {
  nlohmann::ordered_json j;
  j["kind"] = kind_name(s.kind);
  if (s.kind == SheafKind::OC || s.kind == SheafKind::OmegaC) j["a"] = s.thickening;
  j["twist"] = s.twist;
  j["shift"] = s.shift;
  return j.dump();
}

SheafSymbol symbol_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw DomainError("malformed symbol JSON");
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw DomainError("malformed symbol JSON");
  SheafSymbol s;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "OC") s.kind = SheafKind::OC;
  else if (kind == "omegaC") s.kind = SheafKind::OmegaC;
  else if (kind == "Z") s.kind = SheafKind::Z;
  else if (kind == "Zomega") s.kind = SheafKind::ZOmega;
  else throw DomainError("unknown symbol kind '" + kind + "'");
  const auto get_int = [&](const char* key, long long fallback) -> long long {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer()) throw DomainError("malformed symbol JSON");
    return j[key].get<long long>();
  };
  if (s.kind == SheafKind::OC || s.kind == SheafKind::OmegaC) {
    s.thickening = static_cast<int>(get_int("a", 0));
    if (s.thickening < 1) throw DomainError("thickening must be positive");
  }
  s.twist = get_int("twist", 0);
  s.shift = get_int("shift", 0);
  return s;
}

std::string heart_json(const Heart& h) {
  nlohmann::ordered_json j;
  j["index"] = h.index;
  j["simples"] = {nlohmann::ordered_json::parse(symbol_json(h.first_simple)),
                  nlohmann::ordered_json::parse(symbol_json(h.second_simple))};
  j["progenerator"] = h.progenerator_tokens;
  j["deformationAlgebra"] = h.deformation_algebra_token;
  return j.dump();
}

}  // namespace flopkit::helix
