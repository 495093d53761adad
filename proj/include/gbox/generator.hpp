#pragma once

#include <string>
#include <vector>

#include "gbox/ontology.hpp"

namespace gbox {

/// Rule `positive, not negative_1, ..., not negative_k => head`.
///
/// Safe by construction: head and negative-body variables all occur in the
/// positive body, and every variable keeps one type across the rule.
class Generator {
 public:
  Generator() = default;
  Generator(std::string name, Template positive_body, std::vector<Template> negative_bodies,
            Template head);
  Generator(std::string name, Template body, Template head)
      : Generator(std::move(name), std::move(body), {}, std::move(head)) {}

  const std::string& name() const noexcept { return name_; }
  const Template& positive_body() const noexcept { return positive_; }
  const std::vector<Template>& negative_bodies() const noexcept { return negative_; }
  const Template& head() const noexcept { return head_; }
  /// Variables of the rule, i.e. those of the positive body.
  const VarSet& vars() const noexcept { return positive_.vars(); }
  bool has_negation() const noexcept { return !negative_.empty(); }

  Generator renamed(std::string name) const;

  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  std::string name_;
  Template positive_;
  std::vector<Template> negative_;
  Template head_;
};

/// Finite list of generators with unique names.
class GBox {
 public:
  GBox() = default;
  explicit GBox(std::vector<Generator> generators);

  const std::vector<Generator>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool empty() const noexcept { return generators_.empty(); }
  auto begin() const { return generators_.begin(); }
  auto end() const { return generators_.end(); }

  bool has_negation() const noexcept;
  /// Largest variable count of any generator (n in the fixpoint size bound).
  std::size_t max_variables() const noexcept;

  friend bool operator==(const GBox&, const GBox&) = default;

 private:
  std::vector<Generator> generators_;
};

}  // namespace gbox
