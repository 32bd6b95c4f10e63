#include "mrgrc/gf.hpp"

#include <stdexcept>

#include "mrgrc/errors.hpp"

namespace mrgrc {

uint32_t Field::slow_mul(uint32_t a, uint32_t b) const {
  uint32_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & order_) a ^= poly_;
  }
  return acc;
}

bool Field::is_generator(uint32_t g) const {
  // g generates the multiplicative group iff its powers only return to 1
  // after order-1 steps.
  uint32_t x = g;
  for (uint32_t i = 1; i < order_ - 1; ++i) {
    if (x == 1) return false;
    x = slow_mul(x, g);
  }
  return x == 1;
}

Field::Field(int w) : w_(w) {
  if (w == 8) {
    poly_ = 0x11B;
  } else if (w == 16) {
    poly_ = 0x1100B;
  } else {
    throw Error(Errc::BadInput, "field width must be 8 or 16");
  }
  order_ = 1u << w;

  gen_ = 0;
  for (uint32_t g = 2; g < order_; ++g) {
    if (is_generator(g)) {
      gen_ = g;
      break;
    }
  }
  if (gen_ == 0) throw std::logic_error("no generator found; polynomial not primitive-compatible");

  log_.assign(order_, 0);
  exp_.assign(2 * (order_ - 1), 0);
  uint32_t x = 1;
  for (uint32_t e = 0; e < order_ - 1; ++e) {
    exp_[e] = x;
    exp_[e + order_ - 1] = x;  // doubled so mul() never reduces the exponent sum
    log_[x] = e;
    x = slow_mul(x, gen_);
  }
  if (x != 1) throw std::logic_error("generator period check failed");
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw Error(Errc::BadInput, "division by zero in " + name());
  return exp_[order_ - 1 - log_[a]];
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  uint64_t le = (static_cast<uint64_t>(log_[a]) * (e % (order_ - 1))) % (order_ - 1);
  return exp_[le];
}

const Field& Field::gf256() {
  static const Field f(8);
  return f;
}

const Field& Field::gf65536() {
  static const Field f(16);
  return f;
}

const Field& Field::by_name(const std::string& name) {
  if (name == "gf256") return gf256();
  if (name == "gf65536") return gf65536();
  throw Error(Errc::BadInput, "unknown field '" + name + "' (expected gf256 or gf65536)");
}

}  // namespace mrgrc
