#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kglit {

enum class Split { Train, Valid, Test };

const char* split_name(Split s);
Split split_from_name(const std::string& name);

struct RelTriple {
  int head;
  int rel;
  int tail;
  Split split;
};

struct AttrTriple {
  int entity;
  int attr;
  double value;
  Split split;
};

struct LoadCounts {
  long rel_rows = 0;
  long attr_rows = 0;
};

// Entities, relations and numeric attributes with split-tagged triples.
// Relations and attributes are interned in separate id spaces; an atom's kind
// says which space an id belongs to, so the two can never collide.
struct KnowledgeGraph {
  std::vector<std::string> entity_names;
  std::vector<std::string> relation_names;
  std::vector<std::string> attribute_names;
  std::vector<RelTriple> rel_triples;
  std::vector<AttrTriple> attr_triples;

  int num_entities() const { return static_cast<int>(entity_names.size()); }
  int num_relations() const { return static_cast<int>(relation_names.size()); }
  int num_attributes() const { return static_cast<int>(attribute_names.size()); }

  int intern_entity(const std::string& name);
  int intern_relation(const std::string& name);
  int intern_attribute(const std::string& name);
  std::optional<int> find_entity(const std::string& name) const;

  void add_rel(const std::string& head, const std::string& rel, const std::string& tail,
               Split split);
  // Throws if (entity, attribute) already carries a value.
  void add_attr(const std::string& entity, const std::string& attr, double value, Split split);

  // Reads TSV rows, interning ids in first-appearance order so that repeated
  // loads of the same files yield identical id assignments. Relational rows
  // are `head<TAB>relation<TAB>tail`, attribute rows
  // `entity<TAB>attribute<TAB>decimal-value`. attr_path may be empty.
  // Throws std::runtime_error with file and line number on malformed rows.
  LoadCounts load_split(const std::string& rel_path, const std::string& attr_path, Split split);

  long count_rel(Split split) const;
  long count_attr(Split split) const;

 private:
  std::unordered_map<std::string, int> entity_ids_;
  std::unordered_map<std::string, int> relation_ids_;
  std::unordered_map<std::string, int> attribute_ids_;
  std::unordered_map<int64_t, int> attr_slot_;  // (entity, attr) -> index into attr_triples
};

// Per-attribute statistics over the training split.
struct AttrStat {
  long count = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double sigma = 0.0;      // population std-dev; global fallback when degenerate
  bool sigma_fallback = false;
  bool degenerate = false;  // max == min on train (or no train values at all)
};

struct AttributeStats {
  std::vector<AttrStat> attrs;
  double global_sigma = 0.0;
  bool normalized = false;                        // values rescaled to [0,1]
  std::vector<std::pair<double, double>> raw_range;  // per-attribute train (min, max)

  const AttrStat& at(int attribute) const { return attrs.at(attribute); }
  double sigma(int attribute) const { return attrs.at(attribute).sigma; }

  // Unit-interval value back to the raw scale of the attribute.
  double denormalize(int attribute, double v) const;
  // Raw value into the unit interval, clamped to [0,1] outside the train range.
  double normalize_value(int attribute, double v) const;

  std::string to_json(const KnowledgeGraph& kg) const;
  void save_json(const std::string& path, const KnowledgeGraph& kg) const;
};

// Population statistics per attribute over train-split values; global_sigma
// over the union of all train values. Attributes whose std-dev degenerates to
// zero fall back to global_sigma (flagged), and to 1.0 if even that is zero.
AttributeStats compute_stats(const KnowledgeGraph& kg);

// Min-max rescale of every attribute value to [0,1] using the train range:
// v -> (v - min_a) / (max_a - min_a), valid/test values clamped. An attribute
// with max == min maps to 0.5. Sigmas are divided by the same range and the
// global sigma is recomputed over the rescaled train values.
std::pair<KnowledgeGraph, AttributeStats> normalize_attributes(const KnowledgeGraph& kg,
                                                               const AttributeStats& stats);

struct ExistenceAugmentation {
  int dummy_entity = -1;
  std::vector<int> dummy_relation;  // attribute id -> relation id
  long added_triples = 0;
};

// Adds one dummy entity, one dummy relation per attribute, and a train-split
// triple (e, r_a, e_exists) for every train attribute triple (e, a, .). The
// input graph is left untouched.
std::pair<KnowledgeGraph, ExistenceAugmentation> augment_existence(const KnowledgeGraph& kg);

}  // namespace kglit
