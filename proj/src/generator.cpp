#include "gbox/generator.hpp"

#include <algorithm>
#include <set>

#include "gbox/errors.hpp"

namespace gbox {

namespace {

void require_covered(const std::string& rule, const char* part, const VarSet& inner, const VarSet& outer) {
  for (const auto& [name, type] : inner) {
    auto it = outer.find(name);
    if (it == outer.end()) {
      throw TypeError("generator " + rule + ": variable ?" + name + " of the " + part +
                      " does not occur in the positive body");
    }
    if (it->second != type) {
      throw TypeError("generator " + rule + ": variable ?" + name + " is " + to_string(type) +
                      " in the " + part + " but " + to_string(it->second) + " in the positive body");
    }
  }
}

}  // namespace

Generator::Generator(std::string name, Template positive_body, std::vector<Template> negative_bodies,
                     Template head)
    : name_(std::move(name)),
      positive_(std::move(positive_body)),
      negative_(std::move(negative_bodies)),
      head_(std::move(head)) {
  require_covered(name_, "head", head_.vars(), positive_.vars());
  for (const auto& neg : negative_) require_covered(name_, "negative body", neg.vars(), positive_.vars());
}

Generator Generator::renamed(std::string name) const {
  Generator g = *this;
  g.name_ = std::move(name);
  return g;
}

GBox::GBox(std::vector<Generator> generators) : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!seen.insert(g.name()).second) throw TypeError("duplicate generator name " + g.name());
  }
}

bool GBox::has_negation() const noexcept {
  return std::any_of(generators_.begin(), generators_.end(),
                     [](const Generator& g) { return g.has_negation(); });
}

std::size_t GBox::max_variables() const noexcept {
  std::size_t n = 0;
  for (const auto& g : generators_) n = std::max(n, g.vars().size());
  return n;
}

}  // namespace gbox
