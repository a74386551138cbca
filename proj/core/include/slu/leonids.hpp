#pragma once

#include <memory>
#include <string>
#include <vector>

#include "slu/ar_group.hpp"
#include "slu/design.hpp"
#include "slu/group.hpp"
#include "slu/iso.hpp"
#include "slu/parallelism.hpp"
#include "slu/unital.hpp"

namespace slu {

/// One closure of an order-4 affine unital.
struct Closure {
  /// 'H' for the classical affine type, 'E' for the other one.
  char type = 'H';
  /// Index of the orbit on the parallelisms (Aut of this type).
  std::size_t orbit = 0;
  std::size_t orbit_size = 0;
  Parallelism pi;
  Design design;
  AutomorphismResult aut;
};

/// A named sporadic closure: type and index i of pi_i.
struct LeonidsUnital {
  char type = 'H';
  unsigned index = 0;
  std::size_t orbit_size = 0;
  Parallelism pi;
  Design design;
  AutomorphismResult aut;

  std::string name() const { return std::string(1, type) + "^pi" + std::to_string(index); }
};

/// The complete order-4 picture: both affine types with cyclic S, all
/// parallelisms, orbits of both automorphism groups, and all closures.
class OrderFour {
 public:
  explicit OrderFour(const EnumerationOptions& options = {});

  const SL2& group() const noexcept { return *g_; }
  const ArGroup& ar() const noexcept { return *ar_; }
  const AffineUnital& unital(char type) const { return type == 'H' ? *h_ : *e_; }
  const std::vector<ArElem>& aut(char type) const { return type == 'H' ? aut_h_ : aut_e_; }

  /// All parallelisms, sorted; complete unless the budget ran out.
  const std::vector<Parallelism>& parallelisms() const noexcept { return para_.parallelisms; }
  bool complete() const noexcept { return para_.complete; }
  const std::vector<std::vector<std::size_t>>& orbits(char type) const {
    return type == 'H' ? orbits_h_ : orbits_e_;
  }

  /// One closure per orbit, each by the least parallelism of its orbit;
  /// H first. Computed on first use.
  const std::vector<Closure>& closures() const;

  /// The closures by parallelisms outside the orbits of flat and natural,
  /// named by E-orbit: sizes 24, 6, 20 give pi1, pi2, pi3; of the two of
  /// size 5, pi4 lies in the H-orbit of size 25 and pi5 in the one of size 5;
  /// of the two of size 60, pi7 contains pi_sq and pi6 its inverse. An
  /// H-closure takes the name of the E-representative it is built from.
  /// Order: H by index, then E by index. Throws Error{AxiomViolation} if
  /// the orbit pattern does not fit.
  const std::vector<LeonidsUnital>& leonids() const;

 private:
  std::unique_ptr<SL2> g_;
  std::unique_ptr<ArGroup> ar_;
  std::unique_ptr<AffineUnital> h_, e_;
  std::vector<ArElem> aut_h_, aut_e_;
  EnumerationResult para_;
  std::vector<std::vector<std::size_t>> orbits_h_, orbits_e_;
  mutable std::vector<Closure> closures_;
  mutable std::vector<LeonidsUnital> leonids_;
};

}  // namespace slu
