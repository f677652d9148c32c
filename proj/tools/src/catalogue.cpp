#include "nhodge_cli/catalogue.hpp"

#include "nhodge_cli/app.hpp"

namespace nhodge::cli {

const CatalogueEntry& catalogue_entry(ErrorCode code) {
  static const CatalogueEntry syntax{BadInput, "input must be a polynomial in x1..xn with coefficients in Q[t, 1/t]"};
  static const CatalogueEntry negative{BadInput, "over affine space f must be a polynomial: exponents of x1..xn are nonnegative"};
  static const CatalogueEntry variable{BadInput, "only the variables x1..xn and t may appear"};
  static const CatalogueEntry empty{BadInput, "f must have nonempty support"};
  static const CatalogueEntry shape{BadInput, "all polynomials of a system share the ambient space and n, with 1 <= k <= n"};
  static const CatalogueEntry degenerate{Degenerate, "the Newton polytope must be n-dimensional (upper-half polyhedron of dimension n+1)"};
  static const CatalogueEntry bad_lambda{BadLambda, "λ ∈ R_f: Jordan counts and concentrated E are only determined for eigenvalues outside R_f"};
  static const CatalogueEntry too_large{Internal, "instance exceeds the exact enumeration limits"};
  static const CatalogueEntry inconsistent{Internal, "two independent routes disagree; the input may fail schönness"};
  static const CatalogueEntry internal{Internal, "internal invariant violated (nonpolynomial quotient, non-Eulerian poset or similar)"};
  switch (code) {
    case ErrorCode::Syntax: return syntax;
    case ErrorCode::NegativeExponent: return negative;
    case ErrorCode::BadVariable: return variable;
    case ErrorCode::Empty: return empty;
    case ErrorCode::DimMismatch: return shape;
    case ErrorCode::Degenerate: return degenerate;
    case ErrorCode::BadLambda: return bad_lambda;
    case ErrorCode::TooLarge: return too_large;
    case ErrorCode::Inconsistent:
    case ErrorCode::CayleyMismatch: return inconsistent;
    default: return internal;
  }
}

std::string diagnostic(const Error& e) {
  const std::string name(error_code_name(e.code()));
  std::string detail = e.what();
  if (detail.rfind(name + ": ", 0) == 0) detail.erase(0, name.size() + 2);
  return "nhodge: " + name + ": " + catalogue_entry(e.code()).assumption + " [" + detail + "]";
}

}  // namespace nhodge::cli
