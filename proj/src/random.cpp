#include "xqcalc/random.hpp"

#include <numbers>

namespace xqcalc {

Rng Rng::split(std::string_view name) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  Rng child(state_ ^ h);
  child.next();
  return child;
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

double Rng::uniform(double lo, double hi) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::vector<Exponent> monomials(int dim, int max_degree) {
  std::vector<Exponent> out;
  for (int a = 0; a <= max_degree; ++a) {
    if (dim == 1) {
      out.push_back({a, 0, 0});
      continue;
    }
    for (int b = 0; a + b <= max_degree; ++b) {
      if (dim == 2) {
        out.push_back({a, b, 0});
        continue;
      }
      for (int c = 0; a + b + c <= max_degree; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

Poly random_poly(Rng& rng, int dim, int max_degree) {
  const int degree = rng.uniform_int(0, max_degree);
  Poly::Terms terms;
  for (const auto& e : monomials(dim, degree)) {
    if (rng.uniform_int(0, 1) == 0) continue;
    terms.emplace(e, static_cast<double>(rng.uniform_int(-3, 3)));
  }
  return Poly(dim, std::move(terms));
}

PolyMap random_affine_map(Rng& rng, int source_dim, int target_dim) {
  std::vector<Poly> comps;
  for (int i = 0; i < target_dim; ++i) {
    Poly::Terms terms;
    terms.emplace(Exponent{}, static_cast<double>(rng.uniform_int(-1, 1)));
    for (int j = 0; j < source_dim; ++j) {
      Exponent e{};
      e[static_cast<std::size_t>(j)] = 1;
      terms.emplace(e, static_cast<double>(rng.uniform_int(-2, 2)));
    }
    comps.emplace_back(source_dim, std::move(terms));
  }
  return PolyMap(source_dim, std::move(comps));
}

VectorField random_field(Rng& rng, int dim, int max_degree) {
  std::vector<Poly> comps;
  for (int i = 0; i < dim; ++i) comps.push_back(random_poly(rng, dim, max_degree));
  return VectorField(std::move(comps));
}

DiffOperator random_operator(Rng& rng, int dim) {
  std::vector<DiffOperator::Term> terms;
  const int count = rng.uniform_int(1, 3);
  for (int k = 0; k < count; ++k) {
    Exponent alpha{};
    const int order = rng.uniform_int(1, 2);
    for (int j = 0; j < order; ++j) alpha[static_cast<std::size_t>(rng.uniform_int(0, dim - 1))] += 1;
    terms.push_back({random_poly(rng, dim, 1), alpha});
  }
  return DiffOperator(dim, std::move(terms));
}

namespace {

std::pair<double, double> random_side(Rng& rng) {
  const double a = rng.uniform(-1.5, 1.0);
  return {a, a + rng.uniform(0.2, 1.5)};
}

Dist random_atom(Rng& rng, int dim) {
  const int choice = rng.uniform_int(0, 5);
  switch (choice) {
    case 0: {
      std::vector<double> p;
      for (int i = 0; i < dim; ++i) p.push_back(rng.uniform(-1.0, 1.0));
      return dirac(std::move(p));
    }
    case 1: {
      std::vector<std::pair<double, double>> sides;
      for (int i = 0; i < dim; ++i) sides.push_back(random_side(rng));
      return dim == 1 ? interval(sides[0].first, sides[0].second) : box(std::move(sides));
    }
    case 2:
      return sphere_unit(dim);
    case 3:
      return ball_unit(dim);
    case 4:
      if (dim == 2) {
        const auto [a, b] = random_side(rng);
        return pushforward(Cis{}, interval(a, b));
      }
      if (dim == 3) return pushforward(Sph{}, box({random_side(rng), random_side(rng)}));
      {
        const auto [a, b] = random_side(rng);
        return interval(a, b);
      }
    default:
      if (dim >= 2) {
        const auto [a, b] = random_side(rng);
        const int right = dim - 1;
        std::vector<std::pair<double, double>> sides;
        for (int i = 0; i < right; ++i) sides.push_back(random_side(rng));
        const Dist r = right == 1 ? interval(sides[0].first, sides[0].second) : box(sides);
        const auto order = rng.uniform_int(0, 1) == 0 ? ProductOrder::standard : ProductOrder::reversed;
        return ext_product(interval(a, b), r, order);
      }
      return dirac({rng.uniform(-1.0, 1.0)});
  }
}

}  // namespace

Dist random_dist(Rng& rng, int dim, int depth) {
  if (depth <= 0 || rng.uniform_int(0, 3) == 0) return random_atom(rng, dim);
  // RNG draws are sequenced through locals: argument evaluation order is unspecified
  switch (rng.uniform_int(0, 5)) {
    case 0: {
      const int source = rng.uniform_int(1, 3);
      const PolyMap map = random_affine_map(rng, source, dim);
      return pushforward(map, random_dist(rng, source, depth - 1));
    }
    case 1: {
      const double factor = rng.uniform(-2.0, 2.0);
      return pushforward(Homothety{factor, dim}, random_dist(rng, dim, depth - 1));
    }
    case 2: {
      const Poly g = random_poly(rng, dim, 2);
      return multiply(g, random_dist(rng, dim, depth - 1));
    }
    case 3: {
      const DiffOperator op = random_operator(rng, dim);
      return apply_operator(op, random_dist(rng, dim, depth - 1));
    }
    case 4:
      return lincomb(dim, {{rng.uniform(-2.0, 2.0), random_dist(rng, dim, depth - 1)},
                           {rng.uniform(-2.0, 2.0), random_dist(rng, dim, depth - 1)}});
    default:
      if (dim < 3) {
        std::vector<int> keep;
        for (int i = 0; i < dim; ++i) keep.push_back(i);
        return pushforward(Projection{3, keep}, random_dist(rng, 3, depth - 1));
      }
      return random_atom(rng, dim);
  }
}

std::vector<Dist> atomic_dists(Rng& rng, int dim) {
  std::vector<Dist> out;
  std::vector<double> p;
  std::vector<std::pair<double, double>> sides;
  for (int i = 0; i < dim; ++i) {
    p.push_back(rng.uniform(-1.0, 1.0));
    sides.push_back(random_side(rng));
  }
  out.push_back(dirac(p));
  out.push_back(dim == 1 ? interval(sides[0].first, sides[0].second) : box(sides));
  out.push_back(sphere_unit(dim));
  out.push_back(ball_unit(dim));
  if (dim == 2) out.push_back(pushforward(Cis{}, interval(0.0, 2.0 * std::numbers::pi)));
  if (dim == 2) out.push_back(pushforward(Cis{}, interval(sides[0].first, sides[0].second)));
  if (dim == 3) out.push_back(pushforward(Sph{}, box({sides[0], sides[1]})));
  return out;
}

}  // namespace xqcalc
