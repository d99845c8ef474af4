#pragma once

#include "centkit/centralizer_gl.hpp"
#include "centkit/centralizer_oss.hpp"
#include "centkit/linalg.hpp"

namespace centkit {

struct Sl2Triple {
  QMatrix e;
  QMatrix h;
  QMatrix f;
};

/// e = sum_i xi_i^{i,1}, h e^m w_i = (2m + 1 - d_i) e^m w_i, and f the unique
/// solution of [e,f] = h, [h,f] = -2f (with sigma(f) = f when a form is given).
/// Throws std::logic_error if the system is inconsistent.
[[nodiscard]] Sl2Triple sl2_triple(const GlCentralizer& hat, const FormMatrix* form);
[[nodiscard]] Sl2Triple sl2_triple(const Partition& p, AlgebraType t);

}  // namespace centkit
