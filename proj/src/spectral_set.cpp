#include "fht/spectral_set.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fht/region.hpp"

namespace fht {

namespace {

// Canonical representative of {p, p'}: the one >= 2. R_p = R_{p'} so a set
// parameter is only meaningful up to this involution.
double canon(double p) { return std::max(p, p / (p - 1.0)); }

// Distance of 1/p from 1/2; monotone measure of how large R_p is.
double deviation(double p) { return std::abs(0.5 - 1.0 / p); }

void check_parameter(double p, const char* who) {
  if (!std::isfinite(p) || p <= 1.0)
    throw DomainError(std::string(who) + ": region parameter must lie in (1,inf)");
}

}  // namespace

bool SpectralSet::same_parameter(double p, double q) {
  return std::abs(canon(p) - canon(q)) <= 1e-9 * std::max(1.0, canon(p));
}

SpectralSet SpectralSet::empty() { return SpectralSet(Kind::Empty); }
SpectralSet SpectralSet::plus_minus_one() { return SpectralSet(Kind::PlusMinusOne); }
SpectralSet SpectralSet::open_unit_interval() { return SpectralSet(Kind::OpenUnitInterval); }
SpectralSet SpectralSet::closed_unit_interval() { return SpectralSet(Kind::ClosedUnitInterval); }

SpectralSet SpectralSet::region_interior(double p) {
  check_parameter(p, "region_interior");
  if (p == 2.0) return open_unit_interval();  // one-dimensional reading of int R_2
  return SpectralSet(Kind::RegionInterior, p);
}

SpectralSet SpectralSet::region_boundary(double p) {
  check_parameter(p, "region_boundary");
  if (p == 2.0) return closed_unit_interval();  // bdry R_2 = R_2 = [-1,1]
  return SpectralSet(Kind::RegionBoundary, p);
}

SpectralSet SpectralSet::region_closed(double p) {
  check_parameter(p, "region_closed");
  if (p == 2.0) return closed_unit_interval();
  return SpectralSet(Kind::RegionClosed, p);
}

SpectralSet SpectralSet::region_minus_endpoints(double p) {
  check_parameter(p, "region_minus_endpoints");
  if (p == 2.0) return open_unit_interval();
  return SpectralSet(Kind::RegionMinusEndpoints, p);
}

SpectralSet SpectralSet::union_of(std::vector<SpectralSet> parts) {
  SpectralSet s(Kind::Union);
  s.parts_ = std::move(parts);
  s.normalize();
  return s;
}

SpectralSet SpectralSet::difference(SpectralSet minuend, SpectralSet subtrahend) {
  SpectralSet s(Kind::Difference);
  s.parts_ = {std::move(minuend), std::move(subtrahend)};
  s.normalize();
  return s;
}

std::optional<bool> SpectralSet::symbolic_subset(const SpectralSet& a, const SpectralSet& b) {
  using K = Kind;
  if (a.kind_ == K::Empty) return true;
  if (a == b) return true;
  if (b.kind_ == K::Empty) return false;

  if (a.kind_ == K::Union) {
    bool all = true;
    for (const auto& part : a.parts_) {
      auto r = symbolic_subset(part, b);
      if (!r.has_value()) return std::nullopt;
      all = all && *r;
    }
    return all;
  }
  if (b.kind_ == K::Union) {
    // Sufficient check: a inside some member.
    for (const auto& part : b.parts_) {
      auto r = symbolic_subset(a, part);
      if (r.has_value() && *r) return true;
    }
    return std::nullopt;
  }
  if (a.kind_ == K::Difference || b.kind_ == K::Difference) return std::nullopt;

  const double pa = a.p_, pb = b.p_;
  auto dev_le = [&] { return deviation(canon(pa)) <= deviation(canon(pb)) + 1e-12; };
  auto dev_lt = [&] { return deviation(canon(pa)) < deviation(canon(pb)) - 1e-12; };
  auto dev_eq = [&] { return same_parameter(pa, pb); };

  switch (a.kind_) {
    case K::PlusMinusOne:
      return b.kind_ == K::ClosedUnitInterval || b.kind_ == K::RegionBoundary ||
             b.kind_ == K::RegionClosed;
    case K::OpenUnitInterval:
      switch (b.kind_) {
        case K::OpenUnitInterval:
        case K::ClosedUnitInterval:
        case K::RegionInterior:
        case K::RegionMinusEndpoints:
        case K::RegionClosed:
          return true;
        default:
          return false;
      }
    case K::ClosedUnitInterval:
      return b.kind_ == K::ClosedUnitInterval || b.kind_ == K::RegionClosed;
    case K::RegionInterior:
      switch (b.kind_) {
        case K::RegionInterior:
        case K::RegionMinusEndpoints:
        case K::RegionClosed:
          return dev_le();
        default:
          return false;
      }
    case K::RegionMinusEndpoints:
      switch (b.kind_) {
        case K::RegionInterior:
          return dev_lt();
        case K::RegionMinusEndpoints:
        case K::RegionClosed:
          return dev_le();
        default:
          return false;
      }
    case K::RegionBoundary:
      switch (b.kind_) {
        case K::RegionBoundary:
          return dev_eq();
        case K::RegionClosed:
          return dev_le();
        case K::RegionInterior:
        case K::RegionMinusEndpoints:
          // Boundary contains +-1, punctured/open sets do not.
          return false;
        default:
          return false;
      }
    case K::RegionClosed:
      return b.kind_ == K::RegionClosed ? std::optional<bool>(dev_le())
                                        : std::optional<bool>(false);
    default:
      return std::nullopt;
  }
}

void SpectralSet::normalize() {
  if (kind_ == Kind::Union) {
    // Flatten, drop empties, absorb members contained in other members.
    std::vector<SpectralSet> flat;
    for (auto& part : parts_) {
      if (part.kind_ == Kind::Union)
        flat.insert(flat.end(), part.parts_.begin(), part.parts_.end());
      else if (part.kind_ != Kind::Empty)
        flat.push_back(std::move(part));
    }
    std::vector<SpectralSet> kept;
    for (size_t i = 0; i < flat.size(); ++i) {
      bool absorbed = false;
      for (size_t j = 0; j < flat.size() && !absorbed; ++j) {
        if (i == j) continue;
        auto r = symbolic_subset(flat[i], flat[j]);
        if (r.has_value() && *r) {
          // Contained in an equal member: keep only the first occurrence.
          if (flat[i] == flat[j]) absorbed = j < i;
          else absorbed = true;
        }
      }
      if (!absorbed) kept.push_back(flat[i]);
    }
    std::sort(kept.begin(), kept.end(), [](const SpectralSet& x, const SpectralSet& y) {
      if (x.kind_ != y.kind_) return static_cast<int>(x.kind_) < static_cast<int>(y.kind_);
      return canon(x.p_) < canon(y.p_);
    });
    if (kept.empty()) {
      kind_ = Kind::Empty;
      parts_.clear();
      return;
    }
    if (kept.size() == 1) {
      *this = kept.front();
      return;
    }
    parts_ = std::move(kept);
    return;
  }

  if (kind_ == Kind::Difference) {
    SpectralSet& a = parts_[0];
    SpectralSet& b = parts_[1];
    if (b.kind_ == Kind::Empty) {
      *this = a;
      return;
    }
    auto sub = symbolic_subset(a, b);
    if (sub.has_value() && *sub) {
      *this = empty();
      return;
    }
    // Canonical simplifications used when rendering exact fine spectra.
    if (a.kind_ == Kind::ClosedUnitInterval && b.kind_ == Kind::OpenUnitInterval) {
      *this = plus_minus_one();
      return;
    }
    if (a.kind_ == Kind::ClosedUnitInterval && b.kind_ == Kind::PlusMinusOne) {
      *this = open_unit_interval();
      return;
    }
    if (a.kind_ == Kind::RegionClosed && same_parameter(a.p_, b.p_)) {
      if (b.kind_ == Kind::RegionInterior) {
        *this = region_boundary(a.p_);
        return;
      }
      if (b.kind_ == Kind::RegionMinusEndpoints) {
        *this = plus_minus_one();
        return;
      }
    }
    if (a.kind_ == Kind::RegionClosed && b.kind_ == Kind::PlusMinusOne) {
      *this = region_minus_endpoints(a.p_);
      return;
    }
    if (a.kind_ == Kind::RegionMinusEndpoints && b.kind_ == Kind::RegionInterior &&
        same_parameter(a.p_, b.p_)) {
      // (R_p \ {+-1}) \ int R_p = bdry R_p \ {+-1}; keep as difference.
      return;
    }
    return;
  }
}

bool SpectralSet::contains(Complex lambda) const {
  if (!is_finite(lambda)) return false;
  const double re = lambda.real(), im = lambda.imag();
  switch (kind_) {
    case Kind::Empty:
      return false;
    case Kind::PlusMinusOne:
      return im == 0.0 && (re == 1.0 || re == -1.0);
    case Kind::OpenUnitInterval:
      return im == 0.0 && re > -1.0 && re < 1.0;
    case Kind::ClosedUnitInterval:
      return im == 0.0 && re >= -1.0 && re <= 1.0;
    case Kind::RegionInterior:
      return region_membership(lambda, p_) == RegionClass::Interior;
    case Kind::RegionBoundary:
      return region_membership(lambda, p_) == RegionClass::Boundary;
    case Kind::RegionClosed:
      return region_membership(lambda, p_) != RegionClass::Exterior;
    case Kind::RegionMinusEndpoints:
      return region_membership(lambda, p_) != RegionClass::Exterior &&
             !(im == 0.0 && (re == 1.0 || re == -1.0));
    case Kind::Union:
      for (const auto& part : parts_)
        if (part.contains(lambda)) return true;
      return false;
    case Kind::Difference:
      return parts_[0].contains(lambda) && !parts_[1].contains(lambda);
  }
  return false;
}

SpectralSet SpectralSet::closure() const {
  switch (kind_) {
    case Kind::OpenUnitInterval:
      return closed_unit_interval();
    case Kind::RegionInterior:
    case Kind::RegionMinusEndpoints:
      return region_closed(p_);
    case Kind::Union: {
      std::vector<SpectralSet> closed;
      closed.reserve(parts_.size());
      for (const auto& part : parts_) closed.push_back(part.closure());
      return union_of(std::move(closed));
    }
    default:
      return *this;  // already closed (Difference closures are not needed)
  }
}

bool SpectralSet::operator==(const SpectralSet& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::RegionInterior:
    case Kind::RegionBoundary:
    case Kind::RegionClosed:
    case Kind::RegionMinusEndpoints:
      return same_parameter(p_, other.p_);
    case Kind::Union:
    case Kind::Difference: {
      if (parts_.size() != other.parts_.size()) return false;
      for (size_t i = 0; i < parts_.size(); ++i)
        if (!(parts_[i] == other.parts_[i])) return false;
      return true;
    }
    default:
      return true;
  }
}

std::string SpectralSet::to_string() const {
  auto fmt_p = [](double p) {
    std::ostringstream os;
    os << p;
    return os.str();
  };
  switch (kind_) {
    case Kind::Empty: return "empty";
    case Kind::PlusMinusOne: return "{-1,1}";
    case Kind::OpenUnitInterval: return "(-1,1)";
    case Kind::ClosedUnitInterval: return "[-1,1]";
    case Kind::RegionInterior: return "int R(" + fmt_p(p_) + ")";
    case Kind::RegionBoundary: return "bdry R(" + fmt_p(p_) + ")";
    case Kind::RegionClosed: return "R(" + fmt_p(p_) + ")";
    case Kind::RegionMinusEndpoints: return "R(" + fmt_p(p_) + ") \\ {-1,1}";
    case Kind::Union: {
      std::string s;
      for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += " u ";
        s += parts_[i].to_string();
      }
      return s;
    }
    case Kind::Difference:
      return "(" + parts_[0].to_string() + ") \\ (" + parts_[1].to_string() + ")";
  }
  return "?";
}

}  // namespace fht
