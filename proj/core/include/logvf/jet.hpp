#pragma once

#include "logvf/polynomial.hpp"

namespace logvf {

// Element of O / m^order: every stored term has total degree < order.
class Jet {
 public:
  Jet(const Polynomial& p, int order);

  const Polynomial& poly() const noexcept { return poly_; }
  int order() const noexcept { return order_; }

  Jet inverse() const;

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend bool operator==(const Jet& a, const Jet& b) {
    return a.order_ == b.order_ && a.poly_ == b.poly_;
  }

 private:
  Polynomial poly_;
  int order_;
};

// Keeps degrees strictly below d.  d must be >= 1.
Jet jet_truncate(const Polynomial& p, int d);

}  // namespace logvf
