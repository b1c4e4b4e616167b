#pragma once

#include <climits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eslab/series/context.hpp"
#include "eslab/series/rational.hpp"

namespace eslab {

// Multivariate formal series with exact rational coefficients, stored densely
// over the box described by its context.
//
// Each variable carries a precision P: the stored coefficients agree with the
// true series at every exponent whose degree in that variable is at most P.
// kExact means no information has been lost in that variable.
class TruncatedSeries {
 public:
  static constexpr int kExact = INT_MAX / 4;

  using Exponents = std::vector<int>;
  using Term = std::pair<Exponents, BigRational>;

  explicit TruncatedSeries(ContextPtr ctx);

  static TruncatedSeries zero(ContextPtr ctx) { return TruncatedSeries(std::move(ctx)); }
  static TruncatedSeries constant(ContextPtr ctx, const BigRational& value);
  static TruncatedSeries variable(ContextPtr ctx, const std::string& name);
  // coeff * prod name^exponent; names missing from the map get exponent 0.
  static TruncatedSeries monomial(ContextPtr ctx,
                                  const std::map<std::string, int>& exponents,
                                  const BigRational& coeff = 1);
  // Univariate polynomial sum_i coeffs[i] * name^i.
  static TruncatedSeries polynomial(ContextPtr ctx, const std::string& name,
                                    const std::vector<BigRational>& coeffs);

  const ContextPtr& context() const { return ctx_; }

  // Coefficient lookup. Throws PrecisionError if the exponent lies outside the
  // tracked precision, and returns 0 for exponents outside the box otherwise.
  BigRational coefficient(const Exponents& exponents) const;
  BigRational coefficient(const std::map<std::string, int>& exponents) const;

  // Accumulates coeff into the stored coefficient. Exponents above a cap are
  // dropped and lower that variable's precision to the cap; exponents below
  // the lower bound throw ValuationError.
  void add_term(const Exponents& exponents, const BigRational& coeff);

  // Lowers the tracked precision of a variable to at most p.
  void limit_precision(const std::string& name, int p);

  // Nonzero stored terms in dense (lexicographic) order.
  std::vector<Term> terms() const;
  bool is_zero() const;
  std::size_t term_count() const;

  int precision(const std::string& name) const;
  int precision(std::size_t var) const { return precision_[var]; }
  bool is_exact(const std::string& name) const { return precision(name) == kExact; }
  // Smallest exponent of the variable among stored terms; kExact when zero.
  int valuation(const std::string& name) const;
  int valuation(std::size_t var) const;
  // Smallest total degree in the given variables among stored terms.
  int total_valuation(const std::vector<std::string>& names) const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const BigRational& scalar);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const BigRational& s) { return a *= s; }
  friend TruncatedSeries operator*(const BigRational& s, TruncatedSeries a) { return a *= s; }
  friend TruncatedSeries operator+(TruncatedSeries a, const BigRational& s);
  friend TruncatedSeries operator+(const BigRational& s, TruncatedSeries a) { return std::move(a) + s; }
  friend TruncatedSeries operator-(TruncatedSeries a, const BigRational& s) { return std::move(a) + BigRational(-s); }
  friend TruncatedSeries operator-(const BigRational& s, const TruncatedSeries& a) { return (-a) + s; }

  // Multiplicative inverse. The series must have the form m * (unit) where m
  // is a power of the Laurent variable (or 1) and the unit has a nonzero
  // constant term. Throws ValuationError otherwise.
  TruncatedSeries inverse() const;
  TruncatedSeries pow(unsigned exponent) const;

  // Multiplies by name^k. Negative k on a variable without Laurent range
  // requires the vacated low slices to be zero.
  TruncatedSeries shift(const std::string& name, int k) const;

  // Substitutes a rational for a variable that has exact precision. The
  // result lives in the context without that variable.
  TruncatedSeries specialize(const std::string& name, const BigRational& value) const;
  TruncatedSeries specialize(const std::map<std::string, BigRational>& point) const;

  // Re-embeds into another context, matching variables by name. Variables of
  // the target missing here are treated as absent (exponent 0). Variables
  // missing from the target must not occur in any stored term.
  TruncatedSeries convert_to(const ContextPtr& target) const;
  // As convert_to, then requires the precision to cover every cap of the
  // target. Throws PrecisionError otherwise.
  TruncatedSeries restrict_to(const ContextPtr& target) const;

  // Same coefficients over the same context (precision is not compared).
  bool operator==(const TruncatedSeries& other) const;
  bool operator!=(const TruncatedSeries& other) const { return !(*this == other); }

  std::string to_string() const;
  static std::string monomial_string(const SeriesContext& ctx, const Exponents& e);

 private:
  void require_same_context(const TruncatedSeries& other) const;
  std::vector<std::size_t> nonzero_offsets() const;
  void drop_precision(std::size_t var, int p);
  TruncatedSeries invert_unit() const;

  ContextPtr ctx_;
  std::vector<BigRational> coeffs_;
  std::vector<int> precision_;
};

}  // namespace eslab
