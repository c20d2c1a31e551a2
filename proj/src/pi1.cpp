#include "pi1.hpp"

#include <sstream>

#include "errors.hpp"
#include "helix.hpp"
#include "json.hpp"

namespace flopkit::pi1 {

namespace {

void check_hole_count(int n) {
  if (n < 1) throw DomainError("need at least one equator puncture");
}

std::string generator_name(const Generator& g) {
  switch (g.kind) {
    case Generator::A: return "a";
    case Generator::B: return "b" + std::to_string(g.index);
    case Generator::C: return "c";
  }
  throw InternalError("unhandled generator kind");
}

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().exponent == -l.exponent)
    out.pop_back();
  else
    out.push_back(l);
}

}  // namespace

Presentation presentation(int hole_count) {
  check_hole_count(hole_count);
  Presentation p;
  p.hole_count = hole_count;
  p.generator_names.push_back("a");
  for (int i = 0; i < hole_count; ++i) p.generator_names.push_back("b" + std::to_string(i));
  p.generator_names.push_back("c");
  p.relation.letters.push_back({{Generator::C, 0}, 1});
  for (int i = 0; i < hole_count; ++i) p.relation.letters.push_back({{Generator::B, i}, 1});
  p.relation.letters.push_back({{Generator::A, 0}, 1});
  return p;
}

GroupWord parse_word(const std::string& text, int hole_count) {
  check_hole_count(hole_count);
  GroupWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    const auto bad = [&] { throw DomainError("unknown generator token '" + tok + "'"); };
    Letter l;
    std::string base = tok;
    if (const auto caret = tok.find('^'); caret != std::string::npos) {
      if (tok.substr(caret) != "^-1") bad();
      base = tok.substr(0, caret);
      l.exponent = -1;
    }
    if (base == "a") {
      l.gen = {Generator::A, 0};
    } else if (base == "c") {
      l.gen = {Generator::C, 0};
    } else if (base.size() >= 2 && base[0] == 'b') {
      for (std::size_t i = 1; i < base.size(); ++i)
        if (base[i] < '0' || base[i] > '9') bad();
      if (base.size() > 2 && base[1] == '0') bad();  // no leading zeros
      int idx = 0;
      try {
        idx = std::stoi(base.substr(1));
      } catch (const std::exception&) {
        bad();
      }
      if (idx < 0 || idx >= hole_count) bad();
      l.gen = {Generator::B, idx};
    } else {
      bad();
    }
    w.letters.push_back(l);
  }
  return w;
}

std::string word_text(const GroupWord& w) {
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += " ";
    out += generator_name(l.gen);
    if (l.exponent == -1) out += "^-1";
  }
  return out;
}

GroupWord normal_form(const GroupWord& w, int hole_count) {
  check_hole_count(hole_count);
  // c = (b_0 ... b_{n-1} a)^-1 from the relation, so c expands to
  // a^-1 b_{n-1}^-1 ... b_0^-1 and c^-1 to b_0 ... b_{n-1} a.
  std::vector<Letter> out;
  for (const Letter& l : w.letters) {
    if (l.gen.kind == Generator::B && l.gen.index >= hole_count)
      throw DomainError("generator b" + std::to_string(l.gen.index) +
                        " is outside this presentation");
    if (l.gen.kind != Generator::C) {
      push_reduced(out, l);
      continue;
    }
    if (l.exponent == 1) {
      push_reduced(out, {{Generator::A, 0}, -1});
      for (int i = hole_count - 1; i >= 0; --i) push_reduced(out, {{Generator::B, i}, -1});
    } else {
      for (int i = 0; i < hole_count; ++i) push_reduced(out, {{Generator::B, i}, 1});
      push_reduced(out, {{Generator::A, 0}, 1});
    }
  }
  return GroupWord{out};
}

bool words_equal(const GroupWord& lhs, const GroupWord& rhs, int hole_count) {
  return normal_form(lhs, hole_count) == normal_form(rhs, hole_count);
}

std::string presentation_json(const Presentation& p) {
  nlohmann::ordered_json j;
  j["N"] = p.hole_count;
  j["generators"] = p.generator_names;
  j["relation"] = word_text(p.relation);
  return j.dump();
}

FunctorExpr reduce(FunctorExpr e) {
  std::vector<FunctorAtom> out;
  for (const FunctorAtom& atom : e.atoms) {
    out.push_back(atom);
    // Fold until the tail is stable; each pass shortens the vector.
    while (out.size() >= 1) {
      FunctorAtom& last = out.back();
      if (last.kind == FunctorAtom::TensorO && last.amount == 0) {
        out.pop_back();
        continue;
      }
      if (out.size() < 2) break;
      FunctorAtom& prev = out[out.size() - 2];
      if (prev.kind == FunctorAtom::TensorO && last.kind == FunctorAtom::TensorO) {
        prev.amount += last.amount;
        out.pop_back();
        continue;
      }
      const bool inverse_pair =
          prev.kind == last.kind && prev.amount == last.amount &&
          prev.exponent == -last.exponent &&
          (prev.kind == FunctorAtom::Twist || prev.kind == FunctorAtom::Flop);
      if (inverse_pair) {
        out.pop_back();
        out.pop_back();
        continue;
      }
      break;
    }
  }
  return FunctorExpr{out};
}

FunctorExpr compose(const FunctorExpr& f, const FunctorExpr& g) {
  FunctorExpr e = f;
  e.atoms.insert(e.atoms.end(), g.atoms.begin(), g.atoms.end());
  return reduce(std::move(e));
}

FunctorExpr monodromy(const GroupWord& w, int ell) {
  const int n = helix::period_count(ell);
  FunctorExpr e;
  for (const Letter& l : w.letters) {
    switch (l.gen.kind) {
      case Generator::A:
        e.atoms.push_back({FunctorAtom::TensorO, -l.exponent, 1});
        break;
      case Generator::B:
        if (l.gen.index >= n)
          throw DomainError("generator b" + std::to_string(l.gen.index) +
                            " is outside this presentation");
        e.atoms.push_back({FunctorAtom::Twist, l.gen.index, l.exponent});
        break;
      case Generator::C:
        // Conjugate of the pole loop on the other side of the contraction.
        e.atoms.push_back({FunctorAtom::Flop, 0, -1});
        e.atoms.push_back({FunctorAtom::TensorO, -l.exponent, 1});
        e.atoms.push_back({FunctorAtom::Flop, 0, 1});
        break;
    }
  }
  return reduce(std::move(e));
}

std::string functor_text(const FunctorExpr& e) {
  if (e.atoms.empty()) return "id";
  std::string out;
  for (const FunctorAtom& atom : e.atoms) {
    if (!out.empty()) out += " . ";
    switch (atom.kind) {
      case FunctorAtom::TensorO:
        out += "tensor(" + std::to_string(atom.amount) + ")";
        break;
      case FunctorAtom::Twist:
        out += "twist(" + std::to_string(atom.amount) + ")";
        if (atom.exponent == -1) out += "^-1";
        break;
      case FunctorAtom::Flop:
        out += "flop";
        if (atom.exponent == -1) out += "^-1";
        break;
    }
  }
  return out;
}

}  // namespace flopkit::pi1
