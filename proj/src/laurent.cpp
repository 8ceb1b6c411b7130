#include "lpalg/laurent.hpp"

#include <functional>

namespace lpalg {

bool LaurentCheckReport::all_laurent() const {
  for (const auto& w : words)
    for (bool b : w.laurent)
      if (!b) return false;
  return true;
}

RationalFn expand_in_initial(const LPSeed& s0, const MutationWord& w, std::size_t i) {
  LPSeed s = mutate_word(s0.rerooted(), w);
  if (i >= s.rank()) throw DomainError("variable index out of range");
  return s.expansion[i];
}

LaurentCheckReport check_laurent_phenomenon(const LPSeed& s0, std::size_t max_len, const Budget& budget) {
  LaurentCheckReport report;
  MutationWord word;
  std::function<void(const LPSeed&)> visit = [&](const LPSeed& s) {
    if (report.words.size() >= static_cast<std::size_t>(budget.words)) {
      report.truncated = true;
      return;
    }
    ExpansionReport e{word, {}, {}};
    for (std::size_t i = 0; i < s.rank(); ++i) {
      e.expansion.push_back(s.expansion[i]);
      e.laurent.push_back(s.expansion[i].is_laurent());
    }
    report.words.push_back(std::move(e));
    if (word.size() == max_len) return;
    HatData h = exchange_laurent(s);
    for (std::size_t k = 0; k < s.rank(); ++k) {
      if (!word.empty() && word.back() == k) continue;
      word.push_back(k);
      visit(mutate(s, h, k));
      word.pop_back();
    }
  };
  visit(s0.rerooted());
  return report;
}

}  // namespace lpalg
