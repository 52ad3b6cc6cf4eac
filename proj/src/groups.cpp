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

#include "fellcp/groups.hpp"

#include <algorithm>
#include <numeric>

namespace fellcp {

std::string to_string(GroupError::Kind kind) {
  switch (kind) {
    case GroupError::Kind::Malformed:
      return "Malformed";
    case GroupError::Kind::TooLarge:
      return "TooLarge";
    case GroupError::Kind::NoIdentity:
      return "NoIdentity";
    case GroupError::Kind::NoInverse:
      return "NoInverse";
    case GroupError::Kind::NotAssociative:
      return "NotAssociative";
    case GroupError::Kind::NotMultiplicative:
      return "NotMultiplicative";
  }
  return "Unknown";
}

FiniteGroup FiniteGroup::validate(
    const std::vector<std::vector<Element>>& table, int max_order) {
  using K = GroupError::Kind;
  const int n = static_cast<int>(table.size());
  if (n == 0) throw GroupError(K::Malformed, {}, "group table is empty");
  if (n > max_order) {
    throw GroupError(
        K::TooLarge, {},
        "group order " + std::to_string(n) + " exceeds the configured cap " +
            std::to_string(max_order));
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      throw GroupError(
          K::Malformed, {a}, "row " + std::to_string(a) + " has wrong length");
    }
    for (int b = 0; b < n; ++b) {
      if (table[a][b] < 0 || table[a][b] >= n) {
        throw GroupError(
            K::Malformed, {a, b},
            "entry (" + std::to_string(a) + "," + std::to_string(b) +
                ") out of range");
      }
    }
  }

  Element e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) {
      ok = table[cand][g] == g && table[g][cand] == g;
    }
    if (ok) e = cand;
  }
  if (e < 0) throw GroupError(K::NoIdentity, {}, "no two-sided identity");

  std::vector<Element> inverse(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (table[g][h] == e && table[h][g] == e) {
        inverse[g] = h;
        break;
      }
    }
    if (inverse[g] < 0) {
      throw GroupError(
          K::NoInverse, {g}, "element " + std::to_string(g) + " has no inverse");
    }
  }

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw GroupError(
              K::NotAssociative, {a, b, c},
              "associativity fails at (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }

  FiniteGroup group;
  group.table_ = table;
  group.inverse_ = std::move(inverse);
  group.identity_ = e;
  return group;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = a + 1; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

GroupPtr make_group(
    const std::vector<std::vector<Element>>& table, int max_order) {
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::validate(table, max_order));
}

GroupPtr trivial_group() { return make_group({{0}}); }

GroupPtr cyclic_group(int n) {
  if (n < 1) throw GroupError(GroupError::Kind::Malformed, {}, "order < 1");
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return make_group(table);
}

GroupPtr symmetric_group(int n) {
  if (n < 1 || n > 4) {
    throw GroupError(
        GroupError::Kind::TooLarge, {}, "symmetric_group supports n in 1..4");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const int order = static_cast<int>(perms.size());
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  std::vector<int> composed(n);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int x = 0; x < n; ++x) composed[x] = perms[a][perms[b][x]];
      table[a][b] = static_cast<Element>(
          std::find(perms.begin(), perms.end(), composed) - perms.begin());
    }
  }
  return make_group(table);
}

GroupHom GroupHom::validate(
    const std::vector<Element>& image, GroupPtr domain, GroupPtr codomain) {
  using K = GroupError::Kind;
  if (static_cast<int>(image.size()) != domain->order()) {
    throw GroupError(K::Malformed, {}, "hom image has wrong length");
  }
  for (Element x : image) {
    if (x < 0 || x >= codomain->order()) {
      throw GroupError(K::Malformed, {}, "hom image entry out of range");
    }
  }
  for (int g = 0; g < domain->order(); ++g) {
    for (int h = 0; h < domain->order(); ++h) {
      if (image[domain->mul(g, h)] != codomain->mul(image[g], image[h])) {
        throw GroupError(
            K::NotMultiplicative, {g, h},
            "hom not multiplicative at (" + std::to_string(g) + "," +
                std::to_string(h) + ")");
      }
    }
  }
  return GroupHom(image, std::move(domain), std::move(codomain));
}

GroupHom GroupHom::identity(GroupPtr group) {
  std::vector<Element> image(group->order());
  std::iota(image.begin(), image.end(), 0);
  return GroupHom(std::move(image), group, group);
}

GroupHom GroupHom::trivial(GroupPtr domain, GroupPtr codomain) {
  std::vector<Element> image(domain->order(), codomain->identity());
  return GroupHom(std::move(image), std::move(domain), std::move(codomain));
}

GroupHom GroupHom::after(const GroupHom& inner) const {
  if (!(inner.codomain() == domain())) {
    throw GroupError(
        GroupError::Kind::Malformed, {}, "cannot compose: group mismatch");
  }
  std::vector<Element> image(inner.domain().order());
  for (int g = 0; g < inner.domain().order(); ++g) image[g] = image_[inner(g)];
  return GroupHom(std::move(image), inner.domain_ptr(), codomain_);
}

std::vector<Element> kernel(const GroupHom& phi) {
  std::vector<Element> ker;
  for (int g = 0; g < phi.domain().order(); ++g) {
    if (phi(g) == phi.codomain().identity()) ker.push_back(g);
  }
  return ker;
}

}  // namespace fellcp
