#pragma once

// Homotopy certificates: zig-zags of natural transformations
//
//   F_0 => F_1 <= F_2 => ...
//
// between functors with common source and target. After taking nerves each
// transformation is a simplicial homotopy, so a verified certificate
// witnesses that F_0 and F_k are homotopic.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hammock/category.hpp"
#include "hammock/common.hpp"
#include "hammock/hammock.hpp"

namespace hammock {

enum class Direction { forward, backward };
std::string_view to_string(Direction d);

template <CategoryLike C, CategoryLike D>
struct CertificateStep {
  Direction direction;
  /// forward: F_i => F_{i+1}; backward: F_{i+1} => F_i.
  NatTrans<C, D> transformation;
};

template <CategoryLike C, CategoryLike D>
struct Certificate {
  /// F_0 ... F_k; always one more than steps.
  std::vector<Functor<C, D>> functors;
  std::vector<CertificateStep<C, D>> steps;

  const Functor<C, D>& start() const { return functors.front(); }
  const Functor<C, D>& finish() const { return functors.back(); }
  std::size_t length() const { return steps.size(); }
};

using HomotopyCertificate = Certificate<HammockStage, HammockStage>;
using StageStep = CertificateStep<HammockStage, HammockStage>;

template <CategoryLike C, CategoryLike D>
Certificate<C, D> empty_certificate(Functor<C, D> f) {
  return Certificate<C, D>{{std::move(f)}, {}};
}

template <CategoryLike C, CategoryLike D>
void push_step(Certificate<C, D>& cert, Direction dir, NatTrans<C, D> eta) {
  Functor<C, D> next = dir == Direction::forward ? eta.to : eta.from;
  cert.steps.push_back({dir, std::move(eta)});
  cert.functors.push_back(std::move(next));
}

template <CategoryLike C>
bool same_category(const C& a, const C& b) {
  return &a == &b;
}
inline bool same_category(const HammockStage& a, const HammockStage& b) { return a.same_as(b); }

struct CertificateFailure {
  std::size_t step;
  Violation violation;
};

std::ostream& operator<<(std::ostream& os, const CertificateFailure& f);

/// Checks every step's naturality, that each transformation connects the
/// listed functors (extensionally), and that all functors share source and
/// target. Exceptions thrown by functor actions count as failures.
template <EnumerableCategory C, CategoryLike D>
std::optional<CertificateFailure> verify_certificate(const Certificate<C, D>& cert) {
  if (cert.functors.size() != cert.steps.size() + 1) {
    return CertificateFailure{0, {"certificate-shape", "functor list must be one longer than the step list", {}}};
  }
  const auto& f0 = cert.functors.front();
  for (std::size_t i = 0; i < cert.functors.size(); ++i) {
    const auto& f = cert.functors[i];
    if (!same_category(*f.source, *f0.source) || !same_category(*f.target, *f0.target)) {
      return CertificateFailure{i == 0 ? 0 : i - 1,
                                {"certificate-categories", "functors do not share source and target", {f.name}}};
    }
  }
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& step = cert.steps[i];
    const auto& eta = step.transformation;
    const auto& from = step.direction == Direction::forward ? cert.functors[i] : cert.functors[i + 1];
    const auto& to = step.direction == Direction::forward ? cert.functors[i + 1] : cert.functors[i];
    try {
      if (auto v = functors_equal(eta.from, from)) return CertificateFailure{i, *v};
      if (auto v = functors_equal(eta.to, to)) return CertificateFailure{i, *v};
      if (auto v = check_nat_trans(eta)) return CertificateFailure{i, *v};
    } catch (const std::exception& e) {
      return CertificateFailure{i, {"certificate-evaluation", e.what(), {eta.name}}};
    }
  }
  return std::nullopt;
}

/// Stage certificates whose functors all carry column maps are checked by
/// streaming every ladder once; besides the laws above this also checks
/// that each listed functor sends ladders to ladders. Other stage
/// certificates fall back to the generic check.
std::optional<CertificateFailure> verify_certificate(const HomotopyCertificate& cert);

/// c1 followed by c2; throws std::invalid_argument unless c1 ends where c2
/// starts.
template <EnumerableCategory C, CategoryLike D>
Certificate<C, D> compose_certificates(const Certificate<C, D>& c1, const Certificate<C, D>& c2) {
  if (functors_equal(c1.finish(), c2.start())) {
    throw std::invalid_argument("certificate endpoints do not match");
  }
  Certificate<C, D> out = c1;
  out.functors.insert(out.functors.end(), c2.functors.begin() + 1, c2.functors.end());
  out.steps.insert(out.steps.end(), c2.steps.begin(), c2.steps.end());
  return out;
}

/// The transformation K∘η : K∘F => K∘G.
template <CategoryLike C, CategoryLike D, CategoryLike E>
NatTrans<C, E> whisker_post(const NatTrans<C, D>& eta, const Functor<D, E>& k) {
  return NatTrans<C, E>{k.name + "." + eta.name, compose(k, eta.from), compose(k, eta.to),
                        [eta, k](const typename C::Object& o) { return k(eta(o)); }};
}

/// The transformation η∘K : F∘K => G∘K.
template <CategoryLike B, CategoryLike C, CategoryLike D>
NatTrans<B, D> whisker_pre(const NatTrans<C, D>& eta, const Functor<B, C>& k) {
  return NatTrans<B, D>{eta.name + "." + k.name, compose(eta.from, k), compose(eta.to, k),
                        [eta, k](const typename B::Object& o) { return eta(k(o)); }};
}

/// Componentwise image K∘c of a certificate; throws std::invalid_argument
/// if K does not start at the certificate's target category.
template <CategoryLike C, CategoryLike D, CategoryLike E>
Certificate<C, E> whisker_post(const Certificate<C, D>& cert, const Functor<D, E>& k) {
  if (!same_category(*k.source, *cert.start().target)) {
    throw std::invalid_argument("whiskering functor is not composable with the certificate");
  }
  Certificate<C, E> out;
  for (const auto& f : cert.functors) out.functors.push_back(compose(k, f));
  for (const auto& s : cert.steps) out.steps.push_back({s.direction, whisker_post(s.transformation, k)});
  return out;
}

/// c∘K; throws std::invalid_argument if K does not end at the certificate's
/// source category.
template <CategoryLike B, CategoryLike C, CategoryLike D>
Certificate<B, D> whisker_pre(const Certificate<C, D>& cert, const Functor<B, C>& k) {
  if (!same_category(*k.target, *cert.start().source)) {
    throw std::invalid_argument("whiskering functor is not composable with the certificate");
  }
  Certificate<B, D> out;
  for (const auto& f : cert.functors) out.functors.push_back(compose(f, k));
  for (const auto& s : cert.steps) out.steps.push_back({s.direction, whisker_pre(s.transformation, k)});
  return out;
}

/// A transformation between stage functors given by its ladder components.
StageNatTrans stage_transformation(std::string name, StageFunctor from, StageFunctor to,
                                   std::function<Ladder(const ZigZag&)> component);

}  // namespace hammock
