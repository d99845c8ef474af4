#include "centkit/centralizer_oss.hpp"

#include <stdexcept>

namespace centkit {

FormMatrix build_form(const Partition& p, AlgebraType t) {
  FormMatrix form;
  form.pairing = build_pairing(p, t);  // validates
  form.epsilon = epsilon(t);
  std::vector<std::size_t> offset(static_cast<std::size_t>(p.length()) + 1, 0);
  for (int i = 1; i <= p.length(); ++i)
    offset[static_cast<std::size_t>(i)] = offset[static_cast<std::size_t>(i - 1)] + static_cast<std::size_t>(p.part(i));
  auto position = [&](int block, int power) { return offset[static_cast<std::size_t>(block - 1)] + static_cast<std::size_t>(power); };
  const auto n = static_cast<std::size_t>(p.size());
  form.gram = QMatrix(n, n);
  for (int i = 1; i <= p.length(); ++i) {
    const int ip = form.pairing(i);
    const int d = p.part(i);
    // c_i = (w_i, e^{d-1} w_{i'}); fixed to +1 for i <= i', forced otherwise.
    const int sign_d = (d - 1) % 2 == 0 ? 1 : -1;
    const int c = i <= ip ? 1 : form.epsilon * sign_d;
    for (int a = 0; a < d; ++a) {
      const int b = d - 1 - a;
      const int value = (a % 2 == 0 ? 1 : -1) * c;
      form.gram(position(i, a), position(ip, b)) = value;
    }
  }
  auto inv = inverse(form.gram);
  if (!inv) throw std::logic_error("build_form: degenerate form for " + p.str());
  form.gram_inverse = std::move(*inv);
  return form;
}

QMatrix sigma_matrix(const QMatrix& x, const FormMatrix& form) {
  QMatrix out = form.gram_inverse * (x.transpose() * form.gram);
  out *= Rational(-1);
  return out;
}

SignedElement sigma(const GlCentralizer& hat, const BasisElement& a, const FormMatrix& form) {
  const Partition& p = hat.partition();
  const BasisElement target{form.pairing(a.j), form.pairing(a.i), a.s + p.part(a.i) - p.part(a.j)};
  if (!hat.admissible(target)) throw std::logic_error("sigma: image of " + a.str() + " leaves the window");
  const QMatrix image = sigma_matrix(hat.matrix_of(a), form);
  const QMatrix candidate = hat.matrix_of(target);
  if (image == candidate) return {1, target};
  if (image == candidate * Rational(-1)) return {-1, target};
  throw std::logic_error("sigma: image of " + a.str() + " is not a signed basis element");
}

std::string SignedPair::str() const {
  if (self_paired()) return primary.str();
  return primary.str() + (sign > 0 ? " + " : " - ") + mirror.str();
}

SigmaTable::SigmaTable(const GlCentralizer& hat, const FormMatrix& form) {
  image_.resize(hat.dim());
  sign_.resize(hat.dim());
  for (std::size_t idx = 0; idx < hat.dim(); ++idx) {
    const SignedElement s = sigma(hat, hat.element(idx), form);
    image_[idx] = *hat.index_of(s.element);
    sign_[idx] = s.sign;
  }
  for (std::size_t idx = 0; idx < hat.dim(); ++idx)
    if (image_[image_[idx]] != idx || sign_[image_[idx]] != sign_[idx])
      throw std::logic_error("sigma is not an involution on the xi basis");
}

QVector SigmaTable::apply(const QVector& x) const {
  if (x.size() != image_.size()) throw DimensionMismatch("sigma: coordinate length");
  QVector out(x.size());
  for (std::size_t idx = 0; idx < x.size(); ++idx) {
    if (x[idx].is_zero()) continue;
    out[image_[idx]] = sign_[idx] > 0 ? x[idx] : -x[idx];
  }
  return out;
}

GeMeBases ge_me_bases(const GlCentralizer& hat, const SigmaTable& sigma) {
  GeMeBases out;
  const Partition& p = hat.partition();
  for (std::size_t idx = 0; idx < hat.dim(); ++idx) {
    const std::size_t mirror = sigma.image(idx);
    if (mirror < idx) continue;  // one representative per orbit
    const BasisElement& a = hat.element(idx);
    const BasisElement& b = hat.element(mirror);
    const int c = sigma.sign(idx);
    const int s_label = p.part(a.j) - a.s;
    if (mirror == idx) {
      SignedPair pair{a, a, 1, c > 0 ? Parity::Fixed : Parity::AntiFixed, s_label};
      (c > 0 ? out.ge : out.me).push_back(pair);
    } else {
      out.ge.push_back({a, b, c, Parity::Fixed, s_label});
      out.me.push_back({a, b, -c, Parity::AntiFixed, s_label});
    }
  }
  return out;
}

GeMeBases ge_me_bases(const Partition& p, AlgebraType t) {
  const FormMatrix form = build_form(p, t);
  const GlCentralizer hat(p);
  return ge_me_bases(hat, SigmaTable(hat, form));
}

QVector to_vector(const SignedPair& pair, const GlCentralizer& hat) {
  QVector v(hat.dim());
  v[*hat.index_of(pair.primary)] = 1;
  if (!pair.self_paired()) v[*hat.index_of(pair.mirror)] = pair.sign;
  return v;
}

}  // namespace centkit
