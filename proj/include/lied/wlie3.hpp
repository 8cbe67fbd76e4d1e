#pragma once

// Weak Lie 3-algebras on 3-term complexes and their weak morphisms.
//
// Structure maps are named by the LieD[3] generator they evaluate:
//   l2 (arity 2, degree 0), l21 (2,1), l211 (2,2), l3 (3,1), l31 (3,2), l32 (3,2), l4 (4,2)
// and a weak morphism has f1 (1,0), f2 (2,1), f21 (2,2), f3 (3,2).  In equation tables
// the maps of a morphism's target carry a prime (l2', l21', ...).

#include "lied/multimap.hpp"
#include "lied/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lied {

struct MapSpec {
  std::string name;
  int arity;
  int degree;
};

const std::vector<MapSpec>& structure_map_specs();
const std::vector<MapSpec>& morphism_map_specs();

struct WeakLie3Structure {
  ComplexPtr complex;
  std::map<std::string, MultiMap> maps;

  static WeakLie3Structure zero(ComplexPtr c);
  const MultiMap& operator[](const std::string& name) const;
  MultiMap& operator[](const std::string& name);
  // Throws std::invalid_argument on missing maps or wrong shapes.
  void validate() const;
};

struct WeakMorphism {
  WeakLie3Structure source, target;
  std::map<std::string, MultiMap> maps;

  static WeakMorphism identity(const WeakLie3Structure& s);
  // All components zero except f1.
  static WeakMorphism strict(const WeakLie3Structure& source, const WeakLie3Structure& target, MultiMap f1);
  const MultiMap& operator[](const std::string& name) const;
  MultiMap& operator[](const std::string& name);
  void validate() const;
};

// One identity "d(x) = expr" (d_of set) or "0 = expr", parsed from the text of the table.
struct Equation {
  std::string label;      // e.g. "ELie3:l31"
  std::string generator;  // LieD[3] generator it comes from, "1" for the counit
  std::string text;       // as transcribed
  std::optional<int> d_of;
  QExpr expr;
};

const std::vector<Equation>& structure_equations();  // 15
const std::vector<Equation>& morphism_equations();   // 8
// The Leibniz 3-algebra part: Leib3:l2 .. Leib3:l5.
std::vector<Equation> leibniz_equations();

// Symbols of the tables: structure map, its primed copy, morphism component.
int structure_symbol(const std::string& name);
int target_symbol(const std::string& name);
int morphism_symbol(const std::string& name);

// Residual of one equation; zero iff it holds.
MultiMap residual(const Equation& eq, const Assignment& a, const ComplexPtr& bottom, const ComplexPtr& top);
Assignment structure_assignment(const WeakLie3Structure& s);
Assignment morphism_assignment(const WeakMorphism& f);

Report check_structure(const WeakLie3Structure& s);
Report check_morphism(const WeakMorphism& f);

// f' o f; requires f.target == fp.source.
WeakMorphism compose_morphisms(const WeakMorphism& fp, const WeakMorphism& f);

// Expands dlambda + lambda*lambda = 0 and d(f) - f*lambda + lambda'(*)f = 0 on every
// generator of LieD[3] and compares with the tables.  Row label is the equation label.
struct SynthesizedEquation {
  std::string generator;
  bool has_d;    // false when the generator's own map vanishes for degree reasons
  int d_symbol;  // symbol whose differential the equation computes
  QExpr expr;    // d(symbol) = expr, or 0 = expr
};
std::vector<SynthesizedEquation> synthesize_structure_equations();
std::vector<SynthesizedEquation> synthesize_morphism_equations();
Report check_equation_tables();

}  // namespace lied
