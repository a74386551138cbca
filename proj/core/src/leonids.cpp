#include "slu/leonids.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "slu/closure.hpp"
#include "slu/error.hpp"

namespace slu {

OrderFour::OrderFour(const EnumerationOptions& options)
    : g_(std::make_unique<SL2>(2, 2)), ar_(std::make_unique<ArGroup>(*g_)) {
  const Subgroup s = cyclic_subgroup(*g_, 5);
  const auto search = search_d_sets(*g_, s);
  const auto types = classify_unitals(*ar_, s, search.solutions);
  if (types.size() != 2) throw Error(ErrorKind::AxiomViolation, "expected two affine types at order 4");

  h_ = std::make_unique<AffineUnital>(*g_, s, search.solutions[types[0].representative]);
  aut_h_ = aut_affine(*ar_, *h_);
  const std::set<ArElem> in_h(aut_h_.begin(), aut_h_.end());
  // The E representative is chosen with Aut(E) inside Aut(H).
  for (std::size_t m : types[1].members) {
    auto e = std::make_unique<AffineUnital>(*g_, s, search.solutions[m]);
    auto aut = aut_affine(*ar_, *e);
    if (std::all_of(aut.begin(), aut.end(), [&](const ArElem& t) { return in_h.count(t) > 0; })) {
      e_ = std::move(e);
      aut_e_ = std::move(aut);
      break;
    }
  }
  if (!e_) throw Error(ErrorKind::AxiomViolation, "no E representative with Aut(E) inside Aut(H)");

  para_ = enumerate_parallelisms(*g_, options);
  if (para_.complete) {
    orbits_h_ = parallelism_orbits(*ar_, para_.parallelisms, aut_h_);
    orbits_e_ = parallelism_orbits(*ar_, para_.parallelisms, aut_e_);
  }
}

const std::vector<Closure>& OrderFour::closures() const {
  if (!closures_.empty()) return closures_;
  for (char type : {'H', 'E'}) {
    const auto& orbs = orbits(type);
    for (std::size_t o = 0; o < orbs.size(); ++o) {
      Closure c;
      c.type = type;
      c.orbit = o;
      c.orbit_size = orbs[o].size();
      c.pi = para_.parallelisms[orbs[o].front()];
      c.design = close(unital(type), c.pi);
      c.aut = automorphisms(c.design);
      closures_.push_back(std::move(c));
    }
  }
  return closures_;
}

const std::vector<LeonidsUnital>& OrderFour::leonids() const {
  if (!leonids_.empty()) return leonids_;
  if (!para_.complete) throw Error(ErrorKind::Timeout, "parallelism enumeration incomplete");
  const auto& all = para_.parallelisms;
  auto index_of = [&](const Parallelism& pi) {
    const auto it = std::lower_bound(all.begin(), all.end(), pi);
    if (it == all.end() || *it != pi) throw Error(ErrorKind::InvalidParallelism, "not enumerated");
    return static_cast<std::size_t>(it - all.begin());
  };
  auto orbit_of = [](const std::vector<std::vector<std::size_t>>& orbs) {
    std::map<std::size_t, std::size_t> out;
    for (std::size_t o = 0; o < orbs.size(); ++o)
      for (auto i : orbs[o]) out[i] = o;
    return out;
  };
  const auto h_of = orbit_of(orbits_h_);
  const auto e_of = orbit_of(orbits_e_);
  const std::set<std::size_t> known{index_of(flat(*g_)), index_of(natural(*g_))};
  const std::size_t sq = index_of(pi_sq(*g_));
  const std::size_t sq_inv = index_of(invert(*g_, pi_sq(*g_)));

  auto mismatch = [](const std::string& what) {
    return Error(ErrorKind::AxiomViolation, "unexpected orbit pattern: " + what);
  };
  std::map<unsigned, std::size_t> e_orbit_of_name;
  for (std::size_t o = 0; o < orbits_e_.size(); ++o) {
    const auto& orb = orbits_e_[o];
    if (known.count(orb.front())) continue;
    unsigned name = 0;
    switch (orb.size()) {
      case 24: name = 1; break;
      case 6: name = 2; break;
      case 20: name = 3; break;
      case 5: {
        const auto hs = orbits_h_[h_of.at(orb.front())].size();
        name = hs == 25 ? 4 : hs == 5 ? 5 : 0;
        break;
      }
      case 60:
        if (e_of.at(sq) == o) name = 7;
        else if (e_of.at(sq_inv) == o) name = 6;
        break;
      default: break;
    }
    if (name == 0 || e_orbit_of_name.count(name)) throw mismatch("E-orbit of size " + std::to_string(orb.size()));
    e_orbit_of_name[name] = o;
  }
  if (e_orbit_of_name.size() != 7) throw mismatch("expected seven sporadic E-orbits");

  auto make = [&](char type, unsigned name) {
    const auto& orb = orbits_e_[e_orbit_of_name.at(name)];
    LeonidsUnital u;
    u.type = type;
    u.index = name;
    u.pi = all[orb.front()];
    u.orbit_size = type == 'E' ? orb.size() : orbits_h_[h_of.at(orb.front())].size();
    u.design = close(unital(type), u.pi);
    u.aut = automorphisms(u.design);
    return u;
  };
  std::set<std::size_t> h_used;
  for (unsigned name : {2u, 4u, 5u, 6u, 7u}) {
    leonids_.push_back(make('H', name));
    h_used.insert(h_of.at(orbits_e_[e_orbit_of_name.at(name)].front()));
  }
  if (h_used.size() != 5 || orbits_h_.size() != 7) throw mismatch("H-orbits");
  for (unsigned name = 1; name <= 7; ++name) leonids_.push_back(make('E', name));
  return leonids_;
}

}  // namespace slu
