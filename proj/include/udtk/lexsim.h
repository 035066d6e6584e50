// Copyright 2026 The UDTK Authors. All Rights Reserved.
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

// Lexical resources: word embeddings, bilingual dictionaries and the node
// similarity used by the smoothed partial tree kernel.

#ifndef UDTK_LEXSIM_H_
#define UDTK_LEXSIM_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "udtk/trees.h"

namespace udtk {

// Word -> dense vector table. All vectors share one dimension.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;
  EmbeddingStore(int dimension, std::string language);

  int dimension() const { return dimension_; }
  const std::string &language() const { return language_; }
  size_t size() const { return index_.size(); }

  // Adds a word; the first occurrence of a word wins. Throws ArgumentError
  // on a dimension mismatch.
  void Add(std::string word, std::span<const float> vector);

  // Exact-key lookup; empty span when absent.
  std::span<const float> Find(std::string_view word) const;
  bool Contains(std::string_view word) const { return !Find(word).empty(); }

 private:
  int dimension_ = 0;
  std::string language_;
  std::unordered_map<std::string, size_t> index_;
  std::vector<float> data_;
};

// Text format: optional "count dim" header, then "word v1 ... vd" rows.
// Throws FormatError on empty input or inconsistent rows.
EmbeddingStore ParseEmbeddings(std::string_view text, std::string language,
                               bool lowercase = true,
                               std::string_view source = "<embeddings>");
EmbeddingStore LoadEmbeddings(const std::string &path, std::string language,
                              bool lowercase = true);

// Source word -> ranked target words.
class BilingualDictionary {
 public:
  BilingualDictionary() = default;
  BilingualDictionary(std::string source_language, std::string target_language,
                      bool lowercase = true);

  const std::string &source_language() const { return source_language_; }
  const std::string &target_language() const { return target_language_; }
  size_t size() const { return entries_.size(); }

  // Appends a target to the ranked list of a source; duplicates ignored.
  void Add(std::string_view source, std::string_view target);

  // First-ranked target, after lowercasing when enabled.
  std::optional<std::string> Translate(std::string_view word) const;
  const std::vector<std::string> *Targets(std::string_view word) const;

 private:
  std::string Key(std::string_view word) const;

  std::string source_language_;
  std::string target_language_;
  bool lowercase_ = true;
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

// "source<TAB>target" lines; repeated sources accumulate in file order.
BilingualDictionary ParseDictionary(std::string_view text,
                                    std::string source_language,
                                    std::string target_language,
                                    bool lowercase = true,
                                    std::string_view source = "<dictionary>");
BilingualDictionary LoadDictionary(const std::string &path,
                                   std::string source_language,
                                   std::string target_language,
                                   bool lowercase = true);

// Cosine similarity; 0 when either vector is all zero. Throws ArgumentError
// on a dimension mismatch.
double Cosine(std::span<const double> u, std::span<const double> v);
double Cosine(std::span<const float> u, std::span<const float> v);

// Loaded stores keyed by language and dictionaries keyed by
// (source, target) language pair.
struct LexicalResources {
  std::map<std::string, EmbeddingStore> stores;
  std::map<std::pair<std::string, std::string>, BilingualDictionary>
      dictionaries;
};

enum class EmbeddingMode {
  // Each language is looked up in its own store (monolingual use, or stores
  // that share one cross-lingual space).
  kPerLanguage,
  // Words of non-pivot languages are translated into the pivot language and
  // looked up in the pivot store.
  kPivotTranslate,
};

struct EmbedderOptions {
  EmbeddingMode mode = EmbeddingMode::kPerLanguage;
  std::string pivot_language = "en";
  bool lowercase = true;
};

// Maps (word, language) to a vector of the comparison space. Multiword keys
// (space-joined merges) are tried whole first, then as the mean of their
// parts.
class WordEmbedder {
 public:
  WordEmbedder(const LexicalResources *resources, EmbedderOptions options);

  const EmbedderOptions &options() const { return options_; }

  // Dimension of the comparison space for words of `language`. Throws
  // ConfigError when the needed store is missing.
  int Dimension(std::string_view language) const;

  // nullopt for out-of-vocabulary words. Throws ConfigError when a needed
  // store or dictionary is missing.
  std::optional<std::vector<double>> Lookup(std::string_view word,
                                            std::string_view language) const;

 private:
  const EmbeddingStore &Store(std::string_view language) const;
  const BilingualDictionary &Dictionary(std::string_view language) const;
  std::optional<std::vector<double>> LookupInStore(
      const EmbeddingStore &store, const std::string &word) const;

  const LexicalResources *resources_;
  EmbedderOptions options_;
};

enum class SigmaMode {
  kMonolingual,
  kTranslateThenCompare,
  kSharedSpace,
  // 1 for equal labels, 0 otherwise; needs no resources.
  kLabelIndicator,
};

enum class OovPolicy { kZero, kExactMatchFallback };

struct SigmaConfig {
  SigmaMode mode = SigmaMode::kMonolingual;
  bool pos_must_match = true;
  OovPolicy oov_policy = OovPolicy::kZero;

  bool operator==(const SigmaConfig &other) const = default;
};

// Embedder options implied by a sigma mode.
EmbedderOptions EmbedderOptionsFor(const SigmaConfig &config,
                                   std::string pivot_language, bool lowercase);

// A node as seen by the similarity: label, kind, POS and, for lexical
// nodes, the unit-length vector of its word (empty when out of vocabulary).
struct SigmaNode {
  std::string_view label;
  NodeKind kind = NodeKind::kSyntactic;
  std::string_view pos;
  std::span<const double> unit_vector;
};

// Node similarity in [0, 1]: identical syntactic nodes -> 1; lexical nodes
// with equal POS -> max(0, cosine); otherwise 0.
double SigmaValue(const SigmaConfig &config, const SigmaNode &a,
                  const SigmaNode &b);

// Unit-normalized copy, or empty when the vector is all zero.
std::vector<double> UnitVector(std::span<const double> v);

// Convenience wrapper resolving vectors on the fly.
class NodeSimilarity {
 public:
  NodeSimilarity(SigmaConfig config, const WordEmbedder *embedder);

  const SigmaConfig &config() const { return config_; }
  const WordEmbedder *embedder() const { return embedder_; }

  // Unit vector of a lexical node's word, empty when OOV or when the mode
  // uses no vectors.
  std::vector<double> ResolveUnitVector(const LabeledTree &node,
                                        std::string_view language) const;

  double Sigma(const LabeledTree &a, std::string_view lang_a,
               const LabeledTree &b, std::string_view lang_b) const;

 private:
  SigmaConfig config_;
  const WordEmbedder *embedder_;
};

}  // namespace udtk

#endif  // UDTK_LEXSIM_H_
