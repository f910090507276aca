#include <stdexcept>
#include <unordered_map>

#include "key_encoding.hpp"
#include "pvanish/characters.hpp"

namespace pvanish {

namespace {

class MultiCharRecursion {
 public:
  explicit MultiCharRecursion(PartOrder order) : order_(order) {}

  Integer eval(std::vector<Partition>& betas, std::span<const Part> cls) {
    if (cls.empty()) return 1;
    std::string key;
    for (const auto& b : betas) detail::append_parts(key, b.parts());
    detail::append_parts(key, cls);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

    const bool largest = order_ == PartOrder::largest_first;
    const Part part = largest ? cls.front() : cls.back();
    const auto rest = largest ? cls.subspan(1) : cls.first(cls.size() - 1);
    Integer total = 0;
    for (std::size_t l = 0; l < betas.size(); ++l) {
      for (auto& hook : removable_hooks(betas[l], part)) {
        Partition saved = std::move(betas[l]);
        betas[l] = std::move(hook.result);
        const Integer v = eval(betas, rest);
        betas[l] = std::move(saved);
        if (hook.leg % 2 == 0)
          total += v;
        else
          total -= v;
      }
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  PartOrder order_;
  std::unordered_map<std::string, Integer> memo_;
};

}  // namespace

Integer multi_char_value(std::span<const Partition> betas, const Partition& lambda, PartOrder order) {
  Part total = 0;
  for (const auto& b : betas) total += b.size();
  if (total != lambda.size())
    throw std::invalid_argument("class " + lambda.to_string() + " does not match the total size " +
                                std::to_string(total));
  std::vector<Partition> state(betas.begin(), betas.end());
  MultiCharRecursion recursion(order);
  return recursion.eval(state, lambda.parts());
}

}  // namespace pvanish
