#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mrgrc {

// Characteristic-2 extension field GF(2^w), w in {8, 16}, with fixed
// irreducible polynomials:
//   w = 8  : x^8 + x^4 + x^3 + x + 1          (0x11B)
//   w = 16 : x^16 + x^12 + x^3 + x + 1        (0x1100B)
// Multiplication goes through log/exp tables built from a verified generator,
// so all arithmetic is bit-exact across platforms.
class Field {
 public:
  explicit Field(int w);

  int width() const { return w_; }
  uint32_t order() const { return order_; }       // 2^w
  uint32_t poly() const { return poly_; }         // reduction polynomial
  uint32_t generator() const { return gen_; }
  std::string name() const { return w_ == 8 ? "gf256" : "gf65536"; }

  static const Field& gf256();
  static const Field& gf65536();
  static const Field& by_name(const std::string& name);  // "gf256" | "gf65536"

  uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
  uint32_t sub(uint32_t a, uint32_t b) const { return a ^ b; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  uint32_t inv(uint32_t a) const;
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
  uint32_t pow(uint32_t a, uint64_t e) const;

 private:
  // Carry-less polynomial multiply mod poly_, used only to build the tables.
  uint32_t slow_mul(uint32_t a, uint32_t b) const;
  bool is_generator(uint32_t g) const;

  int w_;
  uint32_t order_;
  uint32_t poly_;
  uint32_t gen_;
  std::vector<uint32_t> log_;   // log_[a] for a in [1, order)
  std::vector<uint32_t> exp_;   // exp_[e] for e in [0, 2*(order-1))
};

}  // namespace mrgrc
