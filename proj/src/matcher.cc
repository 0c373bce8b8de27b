// Copyright 2026 The refminer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "refminer/matcher.h"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "refminer/lexer.h"
#include "refminer/parser.h"

namespace refminer {

std::string_view ToString(MatchKind kind) {
  switch (kind) {
    case MatchKind::kExact:
      return "exact";
    case MatchKind::kRenamedIdentifier:
      return "renamed-identifier";
    case MatchKind::kModified:
      return "modified";
  }
  return "?";
}

double BodyMatch::Similarity() const {
  const int denom = std::max(leaves_before, leaves_after);
  if (denom == 0) return 0.0;
  int matched = 0;
  for (const StatementMapping &m : mappings) {
    if (m.before->IsLeaf() && m.kind != MatchKind::kModified) ++matched;
  }
  return static_cast<double>(matched) / denom;
}

namespace {

// Flattened statement tree of one body.
struct Node {
  const Statement *stmt = nullptr;
  int parent = -1;
  std::vector<int> children;
  std::vector<Token> tokens;
  int partner = -1;
};

std::vector<Node> Flatten(const Statement &root) {
  std::vector<Node> nodes;
  std::function<int(const Statement &, int)> visit =
      [&](const Statement &s, int parent) {
        const int index = static_cast<int>(nodes.size());
        nodes.push_back(Node{&s, parent, {}, Tokenize(s.text, ""), -1});
        for (const Statement &child : s.children) {
          const int c = visit(child, index);
          nodes[index].children.push_back(c);
        }
        return index;
      };
  visit(root, -1);
  return nodes;
}

bool IsAncestor(const std::vector<Node> &nodes, int ancestor, int node) {
  for (int n = node; n != -1; n = nodes[n].parent) {
    if (n == ancestor) return true;
  }
  return false;
}

class Substituter {
 public:
  Substituter(const RenameMap &local, const RenameMap &context)
      : local_(local), context_(context) {}

  // Renders `tokens` with identifiers replaced; records what was replaced.
  std::string Apply(const std::vector<Token> &tokens,
                    std::vector<std::pair<std::string, std::string>> *applied)
      const {
    std::vector<Token> out = tokens;
    for (size_t i = 0; i < out.size(); ++i) {
      if (!out[i].IsIdentifier()) continue;
      if (i > 0 && (out[i - 1].Is(".") || out[i - 1].Is("->")) &&
          !(i > 1 && out[i - 2].Is("this"))) {
        continue;
      }
      const std::string *target = Lookup(out[i].text);
      if (target == nullptr || *target == out[i].text) continue;
      if (applied != nullptr) {
        std::pair<std::string, std::string> entry{out[i].text, *target};
        if (std::find(applied->begin(), applied->end(), entry) ==
            applied->end()) {
          applied->push_back(std::move(entry));
        }
      }
      out[i].text = *target;
    }
    if (out.empty()) return "";
    return NormalizeTokens(out.data(), out.data() + out.size());
  }

 private:
  const std::string *Lookup(const std::string &id) const {
    if (auto it = local_.find(id); it != local_.end()) return &it->second;
    if (auto it = context_.find(id); it != context_.end()) return &it->second;
    return nullptr;
  }
  const RenameMap &local_;
  const RenameMap &context_;
};

struct LocalVar {
  std::string name;
  TypeRef type;
  int node = -1;
  size_t index_in_node = 0;
};

std::vector<LocalVar> Locals(const std::vector<Node> &nodes) {
  std::vector<LocalVar> out;
  for (size_t n = 0; n < nodes.size(); ++n) {
    const auto &vars = nodes[n].stmt->declared_variables;
    for (size_t i = 0; i < vars.size(); ++i) {
      out.push_back(LocalVar{vars[i].name, vars[i].type, static_cast<int>(n), i});
    }
  }
  return out;
}

class BodyMatcher {
 public:
  BodyMatcher(const OperationDecl &before, const OperationDecl &after,
              const RenameMap &context)
      : before_(before), after_(after), context_(context) {}

  BodyMatch Run() {
    BodyMatch result;
    if (!before_.body || !after_.body) {
      if (before_.body) {
        result.unmatched_before = CollectLeaves(*before_.body);
      }
      if (after_.body) result.unmatched_after = CollectLeaves(*after_.body);
      result.leaves_before = static_cast<int>(result.unmatched_before.size());
      result.leaves_after = static_cast<int>(result.unmatched_after.size());
      PairParameters(result);
      for (const VariableCorrespondence &v : result.variables) {
        if (v.before_name != v.after_name) {
          result.substitutions.emplace(v.before_name, v.after_name);
        }
      }
      for (const auto &[k, v] : context_) result.substitutions.emplace(k, v);
      return result;
    }
    b_ = Flatten(*before_.body);
    a_ = Flatten(*after_.body);
    b_[0].partner = 0;
    a_[0].partner = 0;
    kinds_[0] = MatchKind::kExact;

    ExactLeafPass();
    PairParameters(result);
    PairLocals(result);
    RenameMap local;
    for (const VariableCorrespondence &v : result.variables) {
      if (v.before_name != v.after_name) local.emplace(v.before_name, v.after_name);
    }
    Substituter subst(local, context_);
    RenamedLeafPass(subst);
    DropUnsupportedLocalRenames(result, local);
    Substituter final_subst(local, context_);
    MatchComposites(0, 0, final_subst);
    PositionalPass();

    for (size_t i = 0; i < b_.size(); ++i) {
      const Node &n = b_[i];
      if (n.partner >= 0) {
        StatementMapping m;
        m.before = n.stmt;
        m.after = a_[n.partner].stmt;
        m.kind = kinds_.at(static_cast<int>(i));
        if (m.kind == MatchKind::kRenamedIdentifier) {
          m.applied = applied_[static_cast<int>(i)];
        }
        result.mappings.push_back(std::move(m));
      } else if (n.stmt->IsLeaf()) {
        result.unmatched_before.push_back(n.stmt);
      }
      if (n.stmt->IsLeaf()) ++result.leaves_before;
    }
    for (const Node &n : a_) {
      if (!n.stmt->IsLeaf()) continue;
      ++result.leaves_after;
      if (n.partner < 0) result.unmatched_after.push_back(n.stmt);
    }
    result.substitutions = local;
    for (const auto &[k, v] : context_) result.substitutions.emplace(k, v);
    return result;
  }

 private:
  void Link(int b, int a, MatchKind kind,
            std::vector<std::pair<std::string, std::string>> applied = {}) {
    b_[b].partner = a;
    a_[a].partner = b;
    kinds_[b] = kind;
    if (!applied.empty()) applied_[b] = std::move(applied);
  }

  void ExactLeafPass() {
    for (size_t i = 0; i < b_.size(); ++i) {
      if (!b_[i].stmt->IsLeaf()) continue;
      for (size_t j = 0; j < a_.size(); ++j) {
        if (a_[j].partner >= 0 || !a_[j].stmt->IsLeaf()) continue;
        if (a_[j].stmt->kind == b_[i].stmt->kind &&
            a_[j].stmt->text == b_[i].stmt->text) {
          Link(static_cast<int>(i), static_cast<int>(j), MatchKind::kExact);
          break;
        }
      }
    }
  }

  void PairParameters(BodyMatch &result) const {
    const auto &pb = before_.parameters;
    const auto &pa = after_.parameters;
    auto add = [&](const Parameter &b, const Parameter &a) {
      if (b.name.empty() || a.name.empty()) return;
      result.variables.push_back(VariableCorrespondence{
          VariableCorrespondence::Origin::kParameter, b.name, a.name, b.type,
          a.type, b.location, a.location});
    };
    if (pb.size() == pa.size()) {
      for (size_t i = 0; i < pb.size(); ++i) add(pb[i], pa[i]);
      return;
    }
    for (const Parameter &b : pb) {
      for (const Parameter &a : pa) {
        if (a.name == b.name) {
          add(b, a);
          break;
        }
      }
    }
  }

  void PairLocals(BodyMatch &result) {
    std::vector<LocalVar> lb = Locals(b_);
    std::vector<LocalVar> la = Locals(a_);
    std::vector<bool> used_b(lb.size()), used_a(la.size());
    auto add = [&](size_t i, size_t j) {
      used_b[i] = used_a[j] = true;
      result.variables.push_back(VariableCorrespondence{
          VariableCorrespondence::Origin::kLocal, lb[i].name, la[j].name,
          lb[i].type, la[j].type, b_[lb[i].node].stmt->location,
          a_[la[j].node].stmt->location});
    };
    // Declarations matched exactly pin their variables.
    for (size_t i = 0; i < lb.size(); ++i) {
      const int partner = b_[lb[i].node].partner;
      if (partner < 0) continue;
      for (size_t j = 0; j < la.size(); ++j) {
        if (!used_a[j] && la[j].node == partner &&
            la[j].index_in_node == lb[i].index_in_node) {
          add(i, j);
          break;
        }
      }
    }
    std::vector<size_t> rest_b, rest_a;
    for (size_t i = 0; i < lb.size(); ++i) {
      if (!used_b[i]) rest_b.push_back(i);
    }
    for (size_t j = 0; j < la.size(); ++j) {
      if (!used_a[j]) rest_a.push_back(j);
    }
    if (rest_b.size() != rest_a.size()) {
      for (size_t i : rest_b) {
        for (size_t j : rest_a) {
          if (!used_a[j] && la[j].name == lb[i].name) {
            add(i, j);
            break;
          }
        }
      }
      std::erase_if(rest_b, [&](size_t i) { return used_b[i]; });
      std::erase_if(rest_a, [&](size_t j) { return used_a[j]; });
    }
    if (rest_b.size() == rest_a.size()) {
      for (size_t k = 0; k < rest_b.size(); ++k) add(rest_b[k], rest_a[k]);
    }
    // One identifier never maps to two different targets.
    std::set<std::string> seen;
    std::vector<VariableCorrespondence> kept;
    for (VariableCorrespondence &v : result.variables) {
      if (v.before_name != v.after_name && !seen.insert(v.before_name).second) {
        continue;
      }
      kept.push_back(std::move(v));
    }
    result.variables = std::move(kept);
  }

  void RenamedLeafPass(const Substituter &subst) {
    for (size_t i = 0; i < b_.size(); ++i) {
      if (b_[i].partner >= 0 || !b_[i].stmt->IsLeaf()) continue;
      std::vector<std::pair<std::string, std::string>> applied;
      const std::string text = subst.Apply(b_[i].tokens, &applied);
      if (applied.empty()) continue;
      for (size_t j = 0; j < a_.size(); ++j) {
        if (a_[j].partner >= 0 || !a_[j].stmt->IsLeaf()) continue;
        if (a_[j].stmt->kind == b_[i].stmt->kind && a_[j].stmt->text == text) {
          Link(static_cast<int>(i), static_cast<int>(j),
               MatchKind::kRenamedIdentifier, applied);
          break;
        }
      }
    }
  }

  // A local-variable rename survives only if some statement mapping used it.
  void DropUnsupportedLocalRenames(BodyMatch &result, RenameMap &local) {
    std::set<std::pair<std::string, std::string>> used;
    for (const auto &[node, applied] : applied_) {
      used.insert(applied.begin(), applied.end());
    }
    std::erase_if(result.variables, [&](const VariableCorrespondence &v) {
      const bool drop = v.origin == VariableCorrespondence::Origin::kLocal &&
                        v.before_name != v.after_name &&
                        !used.contains({v.before_name, v.after_name});
      if (drop) local.erase(v.before_name);
      return drop;
    });
  }

  int CountLeaves(const std::vector<Node> &nodes, int root) const {
    if (nodes[root].stmt->IsLeaf()) return 1;
    int n = 0;
    for (int c : nodes[root].children) n += CountLeaves(nodes, c);
    return n;
  }

  double LeafOverlap(int bc, int ac) const {
    const int denom = std::max(CountLeaves(b_, bc), CountLeaves(a_, ac));
    if (denom == 0) return 0.0;
    int shared = 0;
    for (size_t i = 0; i < b_.size(); ++i) {
      if (!b_[i].stmt->IsLeaf() || b_[i].partner < 0) continue;
      if (IsAncestor(b_, bc, static_cast<int>(i)) &&
          IsAncestor(a_, ac, b_[i].partner)) {
        ++shared;
      }
    }
    return static_cast<double>(shared) / denom;
  }

  void MatchComposites(int b, int a, const Substituter &subst) {
    for (int bc : b_[b].children) {
      if (b_[bc].stmt->IsLeaf() || b_[bc].partner >= 0) continue;
      int best = -1;
      int best_rank = 0;
      MatchKind best_kind = MatchKind::kModified;
      std::vector<std::pair<std::string, std::string>> best_applied;
      for (int ac : a_[a].children) {
        if (a_[ac].stmt->IsLeaf() || a_[ac].partner >= 0) continue;
        if (a_[ac].stmt->kind != b_[bc].stmt->kind) continue;
        MatchKind kind = MatchKind::kModified;
        std::vector<std::pair<std::string, std::string>> applied;
        if (b_[bc].stmt->text == a_[ac].stmt->text) {
          kind = MatchKind::kExact;
        } else if (subst.Apply(b_[bc].tokens, &applied) == a_[ac].stmt->text) {
          kind = MatchKind::kRenamedIdentifier;
        }
        const bool header = kind != MatchKind::kModified;
        const bool majority = LeafOverlap(bc, ac) >= 0.5;
        const int rank = (header ? 2 : 0) + (majority ? 1 : 0);
        if (rank > best_rank) {
          best = ac;
          best_rank = rank;
          best_kind = kind;
          best_applied = header ? applied
                                : std::vector<std::pair<std::string, std::string>>{};
        }
      }
      if (best >= 0) {
        Link(bc, best, best_kind, best_applied);
        MatchComposites(bc, best, subst);
      }
    }
  }

  void PositionalPass() {
    for (size_t i = 0; i < b_.size(); ++i) {
      const Node &bn = b_[i];
      if (bn.stmt->IsLeaf() || bn.partner < 0) continue;
      const Node &an = a_[bn.partner];
      for (int bc : bn.children) {
        if (!b_[bc].stmt->IsLeaf() || b_[bc].partner >= 0) continue;
        for (int ac : an.children) {
          if (!a_[ac].stmt->IsLeaf() || a_[ac].partner >= 0) continue;
          if (a_[ac].stmt->kind != b_[bc].stmt->kind) continue;
          Link(bc, ac, MatchKind::kModified);
          break;
        }
      }
    }
  }

  const OperationDecl &before_;
  const OperationDecl &after_;
  const RenameMap &context_;
  std::vector<Node> b_;
  std::vector<Node> a_;
  std::map<int, MatchKind> kinds_;
  std::map<int, std::vector<std::pair<std::string, std::string>>> applied_;
};

bool IsDestructor(const OperationDecl &op) {
  return !op.name.empty() && op.name.front() == '~';
}

bool SpecialMembersAgree(const OperationDecl &a, const OperationDecl &b) {
  return a.is_constructor == b.is_constructor &&
         IsDestructor(a) == IsDestructor(b);
}

// Fraction of operations in `b` whose body matches some operation body in
// `a` at or above the body-similarity threshold.
double BodyFraction(const ClassDecl &b, const ClassDecl &a,
                    const RenameMap &context) {
  const size_t denom = std::max(b.operations.size(), a.operations.size());
  if (denom == 0) return 0.0;
  size_t matched = 0;
  for (const OperationDecl &ob : b.operations) {
    for (const OperationDecl &oa : a.operations) {
      if (MatchOperationBodies(ob, oa, context).Similarity() >=
          kBodySimilarityThreshold) {
        ++matched;
        break;
      }
    }
  }
  return static_cast<double>(matched) / static_cast<double>(denom);
}

void PairOperations(ClassMatch &cm, const RenameMap &context) {
  const auto &ob = cm.before->operations;
  const auto &oa = cm.after->operations;
  std::vector<bool> used_b(ob.size()), used_a(oa.size());
  auto link = [&](size_t i, size_t j, bool changed, double score) {
    used_b[i] = used_a[j] = true;
    OperationMatch m;
    m.before = &ob[i];
    m.after = &oa[j];
    m.signature_changed = changed;
    m.score = score;
    cm.operations.push_back(std::move(m));
  };
  for (size_t i = 0; i < ob.size(); ++i) {
    for (size_t j = 0; j < oa.size(); ++j) {
      if (!used_a[j] && SignatureKey(ob[i]) == SignatureKey(oa[j])) {
        link(i, j, false, 1.0);
        break;
      }
    }
  }
  for (size_t i = 0; i < ob.size(); ++i) {
    if (used_b[i]) continue;
    for (size_t j = 0; j < oa.size(); ++j) {
      if (used_a[j]) continue;
      const bool same_name = ob[i].name == oa[j].name;
      const bool both_ctor = ob[i].is_constructor && oa[j].is_constructor &&
                             ob[i].parameters.size() == oa[j].parameters.size();
      const bool both_dtor = IsDestructor(ob[i]) && IsDestructor(oa[j]);
      if (same_name || both_ctor || both_dtor) {
        const double score =
            MatchOperationBodies(ob[i], oa[j], context).Similarity();
        link(i, j, SignatureKey(ob[i]) != SignatureKey(oa[j]) && same_name,
             score);
        break;
      }
    }
  }
  struct Candidate {
    double score;
    size_t i, j;
  };
  std::vector<Candidate> candidates;
  for (size_t i = 0; i < ob.size(); ++i) {
    if (used_b[i]) continue;
    for (size_t j = 0; j < oa.size(); ++j) {
      if (used_a[j] || !SpecialMembersAgree(ob[i], oa[j])) continue;
      const double s = MatchOperationBodies(ob[i], oa[j], context).Similarity();
      if (s >= kBodySimilarityThreshold) candidates.push_back({s, i, j});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate &x, const Candidate &y) {
                     return std::tie(y.score, x.i, x.j) <
                            std::tie(x.score, y.i, y.j);
                   });
  for (const Candidate &c : candidates) {
    if (used_b[c.i] || used_a[c.j]) continue;
    link(c.i, c.j, SignatureKey(ob[c.i]) != SignatureKey(oa[c.j]), c.score);
  }
  for (size_t i = 0; i < ob.size(); ++i) {
    if (!used_b[i]) cm.removed_operations.push_back(&ob[i]);
  }
  for (size_t j = 0; j < oa.size(); ++j) {
    if (!used_a[j]) cm.added_operations.push_back(&oa[j]);
  }
}

bool References(const ClassDecl &cls, const std::string &id) {
  for (const OperationDecl &op : cls.operations) {
    if (!op.body) continue;
    bool found = false;
    std::function<void(const Statement &)> visit = [&](const Statement &s) {
      if (s.referenced_identifiers.contains(id)) found = true;
      for (const Statement &c : s.children) visit(c);
    };
    visit(*op.body);
    if (found) return true;
  }
  return false;
}

void PairAttributes(ClassMatch &cm, const RenameMap &context) {
  const auto &ab = cm.before->attributes;
  const auto &aa = cm.after->attributes;
  std::vector<bool> used_b(ab.size()), used_a(aa.size());
  for (size_t i = 0; i < ab.size(); ++i) {
    for (size_t j = 0; j < aa.size(); ++j) {
      if (!used_a[j] && ab[i].name == aa[j].name) {
        used_b[i] = used_a[j] = true;
        cm.attributes.push_back(
            {&ab[i], &aa[j], ab[i].type == aa[j].type ? 1.0 : 0.5});
        break;
      }
    }
  }
  // Renamed fields: same type and initializer, and either used the same
  // way by some matched operation or not used at all.
  for (size_t i = 0; i < ab.size(); ++i) {
    if (used_b[i]) continue;
    for (size_t j = 0; j < aa.size(); ++j) {
      if (used_a[j] || ab[i].type != aa[j].type ||
          ab[i].initializer != aa[j].initializer) {
        continue;
      }
      // Both names still present on the other side means the field was
      // not renamed.
      bool evidence = !References(*cm.before, ab[i].name) &&
                      !References(*cm.after, aa[j].name);
      if (!evidence) {
        RenameMap with_field = context;
        with_field[ab[i].name] = aa[j].name;
        const std::pair<std::string, std::string> rename{ab[i].name,
                                                         aa[j].name};
        for (const OperationMatch &om : cm.operations) {
          BodyMatch body = MatchOperationBodies(*om.before, *om.after, with_field);
          for (const StatementMapping &m : body.mappings) {
            if (std::find(m.applied.begin(), m.applied.end(), rename) !=
                m.applied.end()) {
              evidence = true;
            }
          }
          if (evidence) break;
        }
      }
      if (!evidence) continue;
      used_b[i] = used_a[j] = true;
      cm.attributes.push_back({&ab[i], &aa[j], 1.0});
      break;
    }
  }
  for (size_t i = 0; i < ab.size(); ++i) {
    if (!used_b[i]) cm.removed_attributes.push_back(&ab[i]);
  }
  for (size_t j = 0; j < aa.size(); ++j) {
    if (!used_a[j]) cm.added_attributes.push_back(&aa[j]);
  }
}

void AddRename(RenameMap &map, std::set<std::string> &ambiguous,
               const std::string &from, const std::string &to) {
  if (from == to || ambiguous.contains(from)) return;
  auto [it, inserted] = map.emplace(from, to);
  if (!inserted && it->second != to) {
    map.erase(it);
    ambiguous.insert(from);
  }
}

}  // namespace

BodyMatch MatchOperationBodies(const OperationDecl &before,
                               const OperationDecl &after,
                               const RenameMap &context) {
  return BodyMatcher(before, after, context).Run();
}

double MemberSimilarity(const ClassDecl &a, const ClassDecl &b) {
  auto keys = [](const ClassDecl &c) {
    std::set<std::string> s;
    for (const AttributeDecl &attr : c.attributes) {
      s.insert("attr:" + SignatureKey(attr));
    }
    for (const OperationDecl &op : c.operations) {
      // Constructor and destructor names follow the class name.
      std::string key = SignatureKey(op);
      if (op.is_constructor) {
        key = "<ctor>" + key.substr(op.name.size());
      } else if (IsDestructor(op)) {
        key = "<dtor>" + key.substr(op.name.size());
      }
      s.insert("op:" + key);
    }
    return s;
  };
  const std::set<std::string> sa = keys(a);
  const std::set<std::string> sb = keys(b);
  if (sa.empty() && sb.empty()) return 1.0;
  size_t shared = 0;
  for (const std::string &k : sa) shared += sb.contains(k) ? 1 : 0;
  const size_t denom = std::max({sa.size(), sb.size(), size_t{1}});
  return static_cast<double>(shared) / static_cast<double>(denom);
}

const ClassMatch *ModelDiff::FindByAfter(const ClassDecl *after) const {
  for (const ClassMatch &m : class_matches) {
    if (m.after == after) return &m;
  }
  return nullptr;
}

const ClassMatch *ModelDiff::FindByBefore(const ClassDecl *before) const {
  for (const ClassMatch &m : class_matches) {
    if (m.before == before) return &m;
  }
  return nullptr;
}

std::string ApplyRenames(const std::string &normalized_text,
                         const RenameMap &renames) {
  static const RenameMap kEmpty;
  return Substituter(kEmpty, renames).Apply(Tokenize(normalized_text, ""),
                                            nullptr);
}

ModelDiff MatchModels(const CodeModel &before, const CodeModel &after) {
  ModelDiff diff;
  const auto &cb = before.classes;
  const auto &ca = after.classes;
  std::vector<bool> used_b(cb.size()), used_a(ca.size());
  auto link = [&](size_t i, size_t j, double score) {
    used_b[i] = used_a[j] = true;
    ClassMatch m;
    m.before = &cb[i];
    m.after = &ca[j];
    m.score = score;
    diff.class_matches.push_back(std::move(m));
  };

  for (size_t i = 0; i < cb.size(); ++i) {
    for (size_t j = 0; j < ca.size(); ++j) {
      if (!used_a[j] && cb[i].QualifiedName() == ca[j].QualifiedName()) {
        link(i, j, MemberSimilarity(cb[i], ca[j]));
        break;
      }
    }
  }

  struct Candidate {
    double score;
    size_t i, j;
  };
  auto greedy = [&](const std::function<double(size_t, size_t)> &score_of) {
    std::vector<Candidate> candidates;
    for (size_t i = 0; i < cb.size(); ++i) {
      if (used_b[i]) continue;
      for (size_t j = 0; j < ca.size(); ++j) {
        if (used_a[j]) continue;
        if ((cb[i].kind == ClassKind::kArtificial) !=
            (ca[j].kind == ClassKind::kArtificial)) {
          continue;
        }
        const double s = score_of(i, j);
        if (s >= kClassMatchThreshold) candidates.push_back({s, i, j});
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const Candidate &x, const Candidate &y) {
                       if (x.score != y.score) return x.score > y.score;
                       const std::string xb = cb[x.i].QualifiedName();
                       const std::string yb = cb[y.i].QualifiedName();
                       if (xb != yb) return xb < yb;
                       return ca[x.j].QualifiedName() < ca[y.j].QualifiedName();
                     });
    for (const Candidate &c : candidates) {
      if (!used_b[c.i] && !used_a[c.j]) link(c.i, c.j, c.score);
    }
  };
  greedy([&](size_t i, size_t j) { return MemberSimilarity(cb[i], ca[j]); });
  greedy([&](size_t i, size_t j) { return BodyFraction(cb[i], ca[j], {}); });

  for (size_t i = 0; i < cb.size(); ++i) {
    if (!used_b[i]) diff.removed_classes.push_back(&cb[i]);
  }
  for (size_t j = 0; j < ca.size(); ++j) {
    if (!used_a[j]) diff.added_classes.push_back(&ca[j]);
  }

  std::set<std::string> ambiguous;
  RenameMap renames;
  for (const ClassMatch &cm : diff.class_matches) {
    if (cm.before->kind != ClassKind::kArtificial) {
      AddRename(renames, ambiguous, cm.before->simple_name,
                cm.after->simple_name);
    }
  }
  for (ClassMatch &cm : diff.class_matches) PairOperations(cm, renames);
  for (ClassMatch &cm : diff.class_matches) {
    for (const OperationMatch &om : cm.operations) {
      if (!om.before->is_constructor && !IsDestructor(*om.before)) {
        AddRename(renames, ambiguous, om.before->name, om.after->name);
      }
    }
  }
  for (ClassMatch &cm : diff.class_matches) PairAttributes(cm, renames);
  for (ClassMatch &cm : diff.class_matches) {
    for (const AttributeMatch &am : cm.attributes) {
      AddRename(renames, ambiguous, am.before->name, am.after->name);
    }
  }
  diff.global_renames = renames;
  for (ClassMatch &cm : diff.class_matches) {
    for (OperationMatch &om : cm.operations) {
      om.body = MatchOperationBodies(*om.before, *om.after, renames);
    }
  }
  return diff;
}

}  // namespace refminer
