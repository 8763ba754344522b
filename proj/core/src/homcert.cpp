#include "hammock/homcert.hpp"

#include <ostream>

namespace hammock {

std::string_view to_string(Direction d) { return d == Direction::forward ? "forward" : "backward"; }

std::ostream& operator<<(std::ostream& os, const CertificateFailure& f) {
  return os << "step " << f.step << ": " << f.violation;
}

StageNatTrans stage_transformation(std::string name, StageFunctor from, StageFunctor to,
                                   std::function<Ladder(const ZigZag&)> component) {
  return StageNatTrans{std::move(name), std::move(from), std::move(to), std::move(component)};
}

namespace {

struct Images {
  std::vector<ZigZag> objects;
  std::vector<std::vector<ObjectId>> nodes;
};

Images images_of(const StageFunctor& f, const std::vector<ZigZag>& objs) {
  Images out;
  const FinCat& tc = f.target->base();
  for (const auto& z : objs) {
    out.objects.push_back(f(z));
    out.nodes.push_back(nodes(tc, out.objects.back()));
  }
  return out;
}

// Whether `cols` is a ladder from a to b given their nodes; names the first
// bad column.
std::optional<std::string> ladder_problem(const FinCat& c, const ZigZag& a, const std::vector<ObjectId>& an,
                                          const ZigZag& b, const std::vector<ObjectId>& bn,
                                          const std::vector<MorphismId>& cols) {
  if (cols.size() != an.size() || cols.size() != bn.size()) return "wrong number of columns";
  if (cols.front() != c.identity(an.front()) || cols.back() != c.identity(an.back()) || an.front() != bn.front() ||
      an.back() != bn.back()) {
    return "end columns are not identities";
  }
  // Both composites of a square exist only if its columns are typed, and
  // every column sits in some square.
  for (std::size_t k = 0; k + 1 < cols.size(); ++k) {
    auto d = a.arrows[k];
    auto e = b.arrows[k];
    auto lhs = is_backward(k) ? c.comp(cols[k], d) : c.comp(cols[k + 1], d);
    auto rhs = is_backward(k) ? c.comp(e, cols[k + 1]) : c.comp(e, cols[k]);
    if (lhs == FinCat::no_morphism() || rhs == FinCat::no_morphism()) {
      return "column " + std::to_string(k) + " or " + std::to_string(k + 1) + " mistyped";
    }
    if (lhs != rhs) return "square at column " + std::to_string(k) + " does not commute";
  }
  return std::nullopt;
}

}  // namespace

std::optional<CertificateFailure> verify_certificate(const HomotopyCertificate& cert) {
  bool annotated = true;
  for (const auto& f : cert.functors) annotated = annotated && f.annotation.has_value();
  for (const auto& st : cert.steps) {
    annotated = annotated && st.transformation.from.annotation && st.transformation.to.annotation;
  }
  if (!annotated || cert.functors.size() != cert.steps.size() + 1) {
    return verify_certificate<HammockStage, HammockStage>(cert);
  }
  const auto& src = *cert.start().source;
  const auto& tgt = *cert.start().target;
  const FinCat& tc = tgt.base();
  for (std::size_t i = 0; i < cert.functors.size(); ++i) {
    const auto& f = cert.functors[i];
    if (!same_category(*f.source, src) || !same_category(*f.target, tgt)) {
      return CertificateFailure{i == 0 ? 0 : i - 1,
                                {"certificate-categories", "functors do not share source and target", {f.name}}};
    }
  }
  const auto& objs = src.objects();
  auto step_of = [&](std::size_t functor) { return functor == 0 ? 0 : functor - 1; };

  std::vector<Images> images;
  try {
    for (const auto& f : cert.functors) images.push_back(images_of(f, objs));
  } catch (const std::exception& e) {
    return CertificateFailure{0, {"certificate-evaluation", e.what(), {}}};
  }
  for (std::size_t i = 0; i < cert.functors.size(); ++i) {
    for (std::size_t z = 0; z < objs.size(); ++z) {
      if (!tgt.has_object(images[i].objects[z])) {
        return CertificateFailure{step_of(i),
                                  {"functor-object", cert.functors[i].name + " sends an object outside the target",
                                   {src.describe(objs[z]), tgt.describe(images[i].objects[z])}}};
      }
    }
  }

  // Each step connects listed functors; a transformation's own functors must
  // agree with them on objects and (structurally or ladder by ladder) on
  // morphisms.
  struct StepData {
    std::size_t from;
    std::size_t to;
    std::vector<std::vector<MorphismId>> components;
    std::vector<const StageFunctor*> unmatched;  // own functors to compare per ladder
    std::vector<std::size_t> unmatched_index;
  };
  std::vector<StepData> steps;
  for (std::size_t s = 0; s < cert.steps.size(); ++s) {
    const auto& st = cert.steps[s];
    const auto& eta = st.transformation;
    StepData d{st.direction == Direction::forward ? s : s + 1, st.direction == Direction::forward ? s + 1 : s, {}, {}, {}};
    try {
      for (auto [own, listed] : {std::pair{&eta.from, d.from}, std::pair{&eta.to, d.to}}) {
        for (std::size_t z = 0; z < objs.size(); ++z) {
          if ((*own)(objs[z]) != images[listed].objects[z]) {
            return CertificateFailure{s,
                                      {"functor-equality", own->name + " and " + cert.functors[listed].name +
                                                               " differ on an object",
                                       {src.describe(objs[z])}}};
          }
        }
        if (*own->annotation != *cert.functors[listed].annotation) {
          d.unmatched.push_back(own);
          d.unmatched_index.push_back(listed);
        }
      }
      for (std::size_t z = 0; z < objs.size(); ++z) {
        auto l = eta(objs[z]);
        if (l.source != images[d.from].objects[z] || l.target != images[d.to].objects[z]) {
          return CertificateFailure{s,
                                    {"component-type", eta.name + " has a component with wrong source/target",
                                     {src.describe(objs[z]), tgt.describe(l)}}};
        }
        if (auto problem = ladder_problem(tc, l.source, images[d.from].nodes[z], l.target, images[d.to].nodes[z],
                                          l.columns)) {
          return CertificateFailure{s,
                                    {"component", eta.name + " has a component that is not a ladder: " + *problem,
                                     {src.describe(objs[z]), tgt.describe(l)}}};
        }
        d.components.push_back(std::move(l.columns));
      }
    } catch (const std::exception& e) {
      return CertificateFailure{s, {"certificate-evaluation", e.what(), {eta.name}}};
    }
    steps.push_back(std::move(d));
  }

  std::optional<CertificateFailure> failure;
  std::vector<std::vector<MorphismId>> buffers(cert.functors.size());
  std::vector<MorphismId> scratch;
  for (std::size_t i = 0; i < objs.size() && !failure; ++i) {
    src.for_each_ladder(i, [&](std::size_t j, std::span<const MorphismId> cols) {
      if (failure) return;
      auto describe = [&] {
        return src.describe(Ladder{objs[i], objs[j], {cols.begin(), cols.end()}});
      };
      for (std::size_t f = 0; f < cert.functors.size(); ++f) {
        apply_columns(*cert.functors[f].annotation, cols, images[f].nodes[i], tc, buffers[f]);
        if (auto problem = ladder_problem(tc, images[f].objects[i], images[f].nodes[i], images[f].objects[j],
                                          images[f].nodes[j], buffers[f])) {
          failure = CertificateFailure{step_of(f),
                                       {"functor-morphism",
                                        cert.functors[f].name + " does not send a ladder to a ladder: " + *problem,
                                        {describe()}}};
          return;
        }
      }
      for (std::size_t s = 0; s < steps.size(); ++s) {
        const auto& d = steps[s];
        for (std::size_t u = 0; u < d.unmatched.size(); ++u) {
          auto listed = d.unmatched_index[u];
          apply_columns(*d.unmatched[u]->annotation, cols, images[listed].nodes[i], tc, scratch);
          if (scratch != buffers[listed]) {
            failure = CertificateFailure{s,
                                         {"functor-equality", d.unmatched[u]->name + " and " +
                                                                  cert.functors[listed].name + " differ on a morphism",
                                          {describe()}}};
            return;
          }
        }
        const auto& from = buffers[d.from];
        const auto& to = buffers[d.to];
        const auto& ci = d.components[i];
        const auto& cj = d.components[j];
        for (std::size_t k = 0; k < from.size(); ++k) {
          if (tc.comp(to[k], ci[k]) != tc.comp(cj[k], from[k])) {
            failure = CertificateFailure{s,
                                         {"naturality",
                                          cert.steps[s].transformation.name +
                                              " has a non-commuting naturality square at column " + std::to_string(k),
                                          {describe()}}};
            return;
          }
        }
      }
    });
  }
  return failure;
}

}  // namespace hammock
