#pragma once

#include <functional>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "paramkit/paramkit.hpp"

namespace th {

using namespace paramkit;

template <CoefficientField F>
PresentationPtr<F> ring(F field, std::vector<std::string> vars, const std::vector<std::string>& quotient = {},
                        MonomialOrder order = MonomialOrder::grevlex()) {
  auto amb = make_ring(std::move(field), std::move(vars));
  std::vector<Polynomial<F>> q;
  for (const auto& s : quotient) q.push_back(parse_polynomial(s, amb));
  return RingPresentation<F>::create(amb, std::move(q), order);
}

inline PresentationPtr<Rationals> qq(std::vector<std::string> vars, const std::vector<std::string>& quotient = {}) {
  return ring(Rationals{}, std::move(vars), quotient);
}

inline PresentationPtr<PrimeField> fp(std::uint32_t p, std::vector<std::string> vars,
                                      const std::vector<std::string>& quotient = {}) {
  return ring(PrimeField(p), std::move(vars), quotient);
}

template <CoefficientField F>
Polynomial<F> P(const PresentationPtr<F>& pres, const std::string& s) {
  return pres->parse(s);
}

template <CoefficientField F>
Ideal<F> I(const PresentationPtr<F>& pres, const std::vector<std::string>& gens) {
  std::vector<Polynomial<F>> v;
  for (const auto& g : gens) v.push_back(pres->parse(g));
  return Ideal<F>(pres, std::move(v));
}

template <CoefficientField F>
ElementSequence<F> seq(const PresentationPtr<F>& pres, const std::vector<std::string>& entries) {
  std::vector<Polynomial<F>> v;
  for (const auto& g : entries) v.push_back(pres->parse(g));
  return ElementSequence<F>(pres, std::move(v));
}

template <CoefficientField F>
CoeffMatrix<F> mat(const PresentationPtr<F>& pres, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Polynomial<F>>> v;
  for (const auto& r : rows) {
    v.emplace_back();
    for (const auto& e : r) v.back().push_back(pres->parse(e));
  }
  return CoeffMatrix<F>(pres, v);
}

inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InternalError;
}

/// sum coefficients_i * gens_i in the ambient ring.
template <CoefficientField F>
Polynomial<F> expand(const std::vector<Polynomial<F>>& coefficients, const std::vector<Polynomial<F>>& gens,
                     const RingPtr<F>& ambient) {
  Polynomial<F> out(ambient);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out += coefficients.at(i).reorder(ambient) * gens[i].reorder(ambient);
  }
  return out;
}

}  // namespace th
