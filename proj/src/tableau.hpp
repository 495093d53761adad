#pragma once

#include <memory>

#include "gbox/reasoner.hpp"

namespace gbox::detail {

/// One satisfiability run over a fixed ontology.
class Tableau {
 public:
  Tableau(const Ontology& o, const TableauConfig& cfg);
  ~Tableau();
  Tableau(const Tableau&) = delete;
  Tableau& operator=(const Tableau&) = delete;

  /// Throws ResourceLimit when cfg.max_nodes is exceeded.
  bool satisfiable();
  const TableauStats& stats() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace gbox::detail
