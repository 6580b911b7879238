#include <limits>
#include <stdexcept>

#include "kfull/core_arith.hpp"

namespace kfull::arith {

KFullStream::KFullStream(unsigned k, u128 lo, u128 hi, bool proper_only)
    : k_(k), hi_(hi), shapes_(shapes_up_to(k, hi, !proper_only)) {
  if (shapes_.size() > std::numeric_limits<std::uint32_t>::max())
    throw std::length_error("too many shapes for a stream");
  if (lo == 0) lo = 1;
  for (std::uint32_t s = 0; s < shapes_.size(); ++s) {
    const u128 v = shapes_[s].power;
    u128 a = 1;
    if (lo > v) a = iroot_ceil((lo - 1) / v + 1, k);  // smallest a with a^k v >= lo
    if (a > std::numeric_limits<u64>::max()) continue;
    push_from(s, static_cast<u64>(a));
  }
}

void KFullStream::push_from(std::uint32_t shape, u64 a) {
  u128 ak, value;
  if (!try_pow(a, k_, ak) || mul_overflows(ak, shapes_[shape].power, value) || value > hi_) return;
  heap_.push({value, a, shape});
}

std::optional<KFullStream::Item> KFullStream::next() {
  if (heap_.empty()) return std::nullopt;
  const HeapEntry top = heap_.top();
  heap_.pop();
  push_from(top.shape, top.a + 1);
  return Item{top.value, top.a, top.shape};
}

KFullRepr KFullStream::repr(const Item& item) const {
  return KFullRepr{k_, item.a, shapes_[item.shape].b};
}

std::vector<KFullEntry> enumerate_kfull(unsigned k, u128 x, bool proper_only) {
  KFullStream stream(k, 1, x, proper_only);
  std::vector<KFullEntry> out;
  while (auto item = stream.next()) out.push_back({item->value, stream.repr(*item)});
  return out;
}

}  // namespace kfull::arith
