#include "hypertrop/pullback.hpp"

#include <algorithm>

namespace hypertrop {

Pullback pullback_subdivision(const ModelMorphism& phi, const Subdivision& codomain) {
  if (!(codomain.base == phi.codomain())) throw InvalidInputError("pullback: subdivision is not over the codomain");
  if (std::any_of(codomain.conductance.begin(), codomain.conductance.end(), [](std::int64_t c) { return c != 1; })) {
    throw InvalidInputError("pullback: codomain subdivision must have unit conductances");
  }
  const Model& dom = phi.domain();
  const Graph& g = dom.graph();
  const Graph& h = phi.codomain().graph();

  Pullback pb;
  pb.sub.base = dom;
  pb.sub.scale = codomain.scale;
  std::vector<std::string> ids = g.vertex_ids();
  for (int v = 0; v < g.num_vertices(); ++v) {
    pb.image.push_back(codomain.locate(phi.vertex_image(v)));
    pb.multiplicity.push_back(horizontal_multiplicity(phi, v));
  }
  std::vector<Edge> edges;
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const EdgeImage& im = phi.edge_image(e);
    std::vector<int> targets;
    std::int64_t conductance = 1;
    std::int64_t mult = 0;
    if (im.collapsed) {
      const Rational pieces = dom.length(e) * Rational(codomain.scale);
      targets.assign(pieces.num() + 1, codomain.locate(im.target));
      conductance = pieces.den();
    } else {
      targets = codomain.edge_points[im.target];
      if (h.edge(im.target).u != phi.vertex_image(ed.u)) std::reverse(targets.begin(), targets.end());
      conductance = phi.slope(e);
      mult = phi.slope(e);
    }
    const auto n = static_cast<std::int64_t>(targets.size()) - 1;
    std::vector<int> pts{ed.u};
    for (std::int64_t k = 1; k < n; ++k) {
      pts.push_back(static_cast<int>(ids.size()));
      ids.push_back(ed.id + ":" + std::to_string(k));
      pb.image.push_back(targets[k]);
      pb.multiplicity.push_back(mult);
    }
    pts.push_back(ed.v);
    for (std::int64_t k = 0; k < n; ++k) {
      edges.push_back({ed.id + "#" + std::to_string(k), pts[k], pts[k + 1]});
      pb.sub.conductance.push_back(conductance);
    }
    pb.sub.edge_points.push_back(std::move(pts));
  }
  pb.sub.graph = Graph(std::move(ids), std::move(edges));
  return pb;
}

Divisor pullback_divisor(const ModelMorphism& phi, const Subdivision& codomain, const Divisor& d) {
  if (static_cast<int>(d.size()) != codomain.num_vertices()) throw InvalidInputError("pullback: divisor size mismatch");
  const Pullback pb = pullback_subdivision(phi, codomain);
  Divisor out(pb.sub.num_vertices(), 0);
  for (int x = 0; x < pb.sub.num_vertices(); ++x) out[x] = pb.multiplicity[x] * d[pb.image[x]];
  return out;
}

RationalFunction pullback_function(const ModelMorphism& phi, const Subdivision& codomain, const RationalFunction& g) {
  if (static_cast<int>(g.size()) != codomain.num_vertices()) throw InvalidInputError("pullback: function size mismatch");
  const Pullback pb = pullback_subdivision(phi, codomain);
  RationalFunction out(pb.sub.num_vertices(), 0);
  for (int x = 0; x < pb.sub.num_vertices(); ++x) out[x] = g[pb.image[x]];
  return out;
}

}  // namespace hypertrop
