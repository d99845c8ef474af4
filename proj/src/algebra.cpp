#include "centkit/algebra.hpp"

namespace centkit {

StructuredAlgebra::StructuredAlgebra(const Partition& p, AlgebraType t)
    : type_(t), hat_(std::make_shared<const GlCentralizer>(p)) {
  if (!validate(p, t)) throw InvalidPartition("partition " + p.str() + " is not valid for " + std::string(to_string(t)));
  const GlCentralizer& hat = *hat_;
  if (t == AlgebraType::GL) {
    for (std::size_t idx = 0; idx < hat.dim(); ++idx) {
      basis_.push_back(unit_vector(hat.dim(), idx));
      weights_.push_back(hat.weight(idx));
      labels_.push_back(hat.element(idx).str());
    }
    triple_ = sl2_triple(hat, nullptr);
    return;
  }
  form_ = build_form(p, t);
  sigma_.emplace(hat, *form_);
  pairs_ = ge_me_bases(hat, *sigma_);
  for (const auto& pair : pairs_->ge) {
    basis_.push_back(to_vector(pair, hat));
    weights_.push_back(hat.weight(pair.primary));
    labels_.push_back(pair.str());
  }
  triple_ = sl2_triple(hat, &*form_);
}

BracketFn StructuredAlgebra::bracket_fn() const {
  auto hat = hat_;
  return [hat](const QVector& x, const QVector& y) { return hat->bracket(x, y); };
}

}  // namespace centkit
