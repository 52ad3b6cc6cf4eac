// Copyright 2026 The fellcp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fellcp/error.hpp"

namespace fellcp {

/** Group elements are dense indices 0..order-1. */
using Element = int;

inline constexpr int kDefaultMaxGroupOrder = 64;

class GroupError : public Error {
 public:
  enum class Kind {
    Malformed,
    TooLarge,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotMultiplicative,
  };

  GroupError(Kind kind, std::vector<Element> witness, const std::string& what)
      : Error(what), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const { return kind_; }
  /** Offending element(s): (g) for NoInverse, (a,b,c) for NotAssociative,
   * (g,h) for NotMultiplicative; empty otherwise. */
  const std::vector<Element>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::vector<Element> witness_;
};

std::string to_string(GroupError::Kind kind);

/**
 * A finite group given by its Cayley table, table[g][h] = g*h.
 *
 * Only obtainable through validate(), so every instance satisfies the group
 * axioms. The identity is discovered from the table and need not be 0.
 */
class FiniteGroup {
 public:
  static FiniteGroup validate(
      const std::vector<std::vector<Element>>& table,
      int max_order = kDefaultMaxGroupOrder);

  int order() const { return static_cast<int>(table_.size()); }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inv(Element g) const { return inverse_[g]; }
  const std::vector<std::vector<Element>>& table() const { return table_; }
  const std::vector<Element>& inverses() const { return inverse_; }
  bool is_abelian() const;

  bool operator==(const FiniteGroup& other) const {
    return table_ == other.table_;
  }

 private:
  FiniteGroup() = default;

  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(
    const std::vector<std::vector<Element>>& table,
    int max_order = kDefaultMaxGroupOrder);

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
/** Symmetric group on n letters; elements are permutations in
 * lexicographic order, product is composition (p*q)(x) = p(q(x)). */
GroupPtr symmetric_group(int n);

/** A homomorphism phi: G -> H stored as its image array. */
class GroupHom {
 public:
  static GroupHom validate(
      const std::vector<Element>& image, GroupPtr domain, GroupPtr codomain);
  static GroupHom identity(GroupPtr group);
  /** The homomorphism sending everything to the identity of `codomain`. */
  static GroupHom trivial(GroupPtr domain, GroupPtr codomain);

  Element operator()(Element g) const { return image_[g]; }
  const FiniteGroup& domain() const { return *domain_; }
  const FiniteGroup& codomain() const { return *codomain_; }
  const GroupPtr& domain_ptr() const { return domain_; }
  const GroupPtr& codomain_ptr() const { return codomain_; }
  const std::vector<Element>& image() const { return image_; }

  /** this o inner. */
  GroupHom after(const GroupHom& inner) const;

 private:
  GroupHom(std::vector<Element> image, GroupPtr domain, GroupPtr codomain)
      : image_(std::move(image)),
        domain_(std::move(domain)),
        codomain_(std::move(codomain)) {}

  std::vector<Element> image_;
  GroupPtr domain_;
  GroupPtr codomain_;
};

/** {g : phi(g) = e}, ascending. Always amenable here (finite). */
std::vector<Element> kernel(const GroupHom& phi);

}  // namespace fellcp
