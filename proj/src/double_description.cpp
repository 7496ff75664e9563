#include "latval/double_description.hpp"

#include <map>
#include <queue>

namespace latval::dd {

namespace {

struct Ray {
  RatVec v;
  Bits tight;
};

}  // namespace

ConeData generators(const linalg::Rows& inequalities, const linalg::Rows& space, int n) {
  const std::size_t m = inequalities.size();
  linalg::Rows lin = linalg::span_basis(space, n);
  std::vector<Ray> rays;

  for (std::size_t c = 0; c < m; ++c) {
    const RatVec& a = inequalities[c];

    // A lineality direction not orthogonal to `a` becomes a ray.
    int pick = -1;
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        pick = static_cast<int>(i);
        break;
      }
    if (pick >= 0) {
      RatVec b = lin[pick];
      Rat ab = dot(a, b);
      lin.erase(lin.begin() + pick);
      for (auto& l : lin) {
        Rat al = dot(a, l);
        if (al != 0) l = primitive(sub(l, scale(b, al / ab)));
      }
      for (auto& r : rays) {
        Rat ar = dot(a, r.v);
        if (ar != 0) r.v = primitive(sub(r.v, scale(b, ar / ab)));
        r.tight.push_back(true);
      }
      Ray nr{primitive(ab > 0 ? scale(b, Rat(-1)) : b), Bits(c + 1)};
      nr.tight.set();
      nr.tight.reset(c);
      rays.push_back(std::move(nr));
      continue;
    }

    std::vector<Rat> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0)
        pos.push_back(i);
      else if (val[i] < 0)
        neg.push_back(i);
    }
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] > 0) continue;
      Ray r = rays[i];
      r.tight.push_back(val[i] == 0);
      next.push_back(std::move(r));
    }
    for (std::size_t ip : pos) {
      for (std::size_t in : neg) {
        Bits common = rays[ip].tight & rays[in].tight;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == ip || o == in) continue;
          if (common.is_subset_of(rays[o].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        RatVec w = sub(scale(rays[in].v, val[ip]), scale(rays[ip].v, val[in]));
        Ray nr{primitive(w), common};
        nr.tight.push_back(true);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  ConeData out;
  for (auto& l : lin) out.lineality.push_back(primitive(l));
  for (auto& r : rays) {
    RatVec v = r.v;
    if (!out.lineality.empty()) v = sub(v, linalg::project(out.lineality, v));
    out.rays.push_back(primitive(v));
  }
  return out;
}

std::vector<FaceRecord> face_lattice(const std::vector<Bits>& facet_rays, std::size_t nrays) {
  const std::size_t nf = facet_rays.size();
  auto closure = [&](const Bits& rays) {
    FaceRecord f{Bits(nrays), Bits(nf)};
    for (std::size_t j = 0; j < nf; ++j)
      if (rays.is_subset_of(facet_rays[j])) f.facets.set(j);
    f.rays.set();
    for (std::size_t j = 0; j < nf; ++j)
      if (f.facets.test(j)) f.rays &= facet_rays[j];
    return f;
  };

  std::map<Bits, Bits> seen;
  std::vector<FaceRecord> out;
  std::queue<FaceRecord> todo;
  Bits all(nrays);
  all.set();
  FaceRecord top = closure(all);
  seen.emplace(top.rays, top.facets);
  todo.push(top);
  while (!todo.empty()) {
    FaceRecord f = todo.front();
    todo.pop();
    out.push_back(f);
    for (std::size_t j = 0; j < nf; ++j) {
      if (f.facets.test(j)) continue;
      FaceRecord g = closure(f.rays & facet_rays[j]);
      if (seen.emplace(g.rays, g.facets).second) todo.push(g);
    }
  }
  return out;
}

}  // namespace latval::dd
