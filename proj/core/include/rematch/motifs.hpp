// Copyright 2026 The rematch Authors
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

#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rematch/amr_graph.hpp"

namespace rematch {

// ---------------------------------------------------------------------------
// Motifs
//
// A graph is described by three orders of features:
//   attribute motif  (label constant)           one per attribute edge
//   instance motif   (concept [attribute-motif]) one per attribute of a node,
//                                               or the bare concept if none
//   relation motif   (src-instance role tgt-instance), the cartesian product
//                                               of both endpoints' instance motifs
// Concepts that look like PropBank frames (`lemma-NN`) are replaced through
// a FrameMap before building instance motifs.
// ---------------------------------------------------------------------------

struct AttributeMotif {
  std::string label;
  Constant value;
  friend auto operator<=>(const AttributeMotif&, const AttributeMotif&) = default;
  friend bool operator==(const AttributeMotif&, const AttributeMotif&) = default;
};

struct InstanceMotif {
  std::string concept_label;
  std::optional<AttributeMotif> attribute;
  friend auto operator<=>(const InstanceMotif&, const InstanceMotif&) = default;
  friend bool operator==(const InstanceMotif&, const InstanceMotif&) = default;
};

struct RelationMotif {
  InstanceMotif source;
  std::string role;
  InstanceMotif target;
  friend auto operator<=>(const RelationMotif&, const RelationMotif&) = default;
  friend bool operator==(const RelationMotif&, const RelationMotif&) = default;
};

using Motif = std::variant<AttributeMotif, InstanceMotif, RelationMotif>;

/// Fully parenthesised prefix form, e.g. `A(polarity,y:-)`,
/// `I(speak,A(polarity,y:-))`, `R(I(speak),ARG1,I(politics))`. Constants are
/// kind-tagged (`s:`, `y:`, `n:`); `\ ( ) ,` inside labels are escaped.
std::string canonical_string(const AttributeMotif& m);
std::string canonical_string(const InstanceMotif& m);
std::string canonical_string(const RelationMotif& m);
std::string canonical_string(const Motif& m);

struct MotifKinds {
  bool attribute = true;
  bool instance = true;
  bool relation = true;

  static MotifKinds all() { return {}; }
  static MotifKinds none() { return {false, false, false}; }
  /// Comma-separated subset of `a,i,r` (long names also accepted). Empty
  /// string selects nothing. Throws std::invalid_argument on unknown items.
  static MotifKinds parse(std::string_view text);
  std::string to_string() const;
  bool empty() const { return !attribute && !instance && !relation; }
  friend bool operator==(const MotifKinds&, const MotifKinds&) = default;
};

/// Sorted set of feature strings.
class FeatureSet {
 public:
  FeatureSet() = default;
  explicit FeatureSet(std::vector<std::string> items);

  bool insert(std::string item);
  bool contains(std::string_view item) const;
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const std::vector<std::string>& items() const noexcept { return items_; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  friend bool operator==(const FeatureSet&, const FeatureSet&) = default;

 private:
  std::vector<std::string> items_;
};

std::size_t intersection_size(const FeatureSet& a, const FeatureSet& b);

using MotifSet = FeatureSet;

/// PropBank frame -> generalised frame. Unmapped frames map to themselves.
class FrameMap {
 public:
  FrameMap() = default;

  void insert(std::string frame, std::string generalized);
  const std::string& lookup(const std::string& frame) const;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

class FrameMapError : public std::runtime_error {
 public:
  FrameMapError(std::size_t line, const std::string& what)
      : std::runtime_error("frame map line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Reads `propbank_frame<TAB>generalized_frame` rows. Blank lines and `#`
/// comments are ignored. A missing file gives the identity map and appends
/// a warning; a row without exactly two non-empty columns throws
/// FrameMapError.
FrameMap load_frame_map(const std::filesystem::path& path, std::vector<std::string>& warnings);
FrameMap load_frame_map(const std::filesystem::path& path);

/// `lemma-NN`, e.g. `talk-01`, `have-org-role-91`.
bool is_propbank_frame(std::string_view concept_label);

class MotifError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

std::vector<AttributeMotif> attribute_motifs(const AmrGraph& g, NodeIndex node);

/// With `with_attributes` false every node yields its bare concept; that is
/// how instance and relation motifs look once attribute motifs are ablated.
std::vector<InstanceMotif> instance_motifs(const AmrGraph& g, NodeIndex node, const FrameMap& frames,
                                           bool with_attributes = true);

std::vector<RelationMotif> relation_motifs(const AmrGraph& g, std::size_t relation,
                                           const FrameMap& frames, bool with_attributes = true);

/// Union of the enabled motif kinds over all nodes and relations. Disabling
/// attribute motifs also strips attributes from instance and relation motifs.
MotifSet motif_set(const AmrGraph& g, const FrameMap& frames, MotifKinds enabled = {});

/// Concepts, roles, attribute labels and constants. Entries are tagged by
/// kind (`c:`, `r:`, `a:`, then constants as `s:`/`y:`/`n:`), so the concept
/// `name` and the role `name` are distinct labels.
FeatureSet label_set(const AmrGraph& g);

}  // namespace rematch
