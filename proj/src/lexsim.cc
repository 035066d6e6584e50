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

#include "udtk/lexsim.h"

#include <algorithm>
#include <cmath>

#include "udtk/error.h"
#include "udtk/util.h"

namespace udtk {

EmbeddingStore::EmbeddingStore(int dimension, std::string language)
    : dimension_(dimension), language_(std::move(language)) {
  if (dimension <= 0) throw ArgumentError("embedding dimension must be > 0");
}

void EmbeddingStore::Add(std::string word, std::span<const float> vector) {
  if (static_cast<int>(vector.size()) != dimension_) {
    throw ArgumentError("vector for '" + word + "' has " +
                        std::to_string(vector.size()) +
                        " components, store dimension is " +
                        std::to_string(dimension_));
  }
  if (index_.count(word)) return;
  index_.emplace(std::move(word), data_.size());
  data_.insert(data_.end(), vector.begin(), vector.end());
}

std::span<const float> EmbeddingStore::Find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return {};
  return std::span<const float>(data_.data() + it->second, dimension_);
}

EmbeddingStore ParseEmbeddings(std::string_view text, std::string language,
                               bool lowercase, std::string_view source) {
  EmbeddingStore store;
  int dimension = 0;
  bool first = true;
  int line_no = 0;
  std::vector<float> values;
  for (std::string_view line : Split(text, '\n')) {
    ++line_no;
    std::vector<std::string_view> fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    auto where = [&]() {
      return std::string(source) + ":" + std::to_string(line_no) + ": ";
    };
    if (first) {
      first = false;
      int count = 0, dim = 0;
      if (fields.size() == 2 && ParseInt(fields[0], &count) &&
          ParseInt(fields[1], &dim)) {
        if (dim <= 0) throw FormatError(where() + "header dimension must be > 0");
        dimension = dim;
        store = EmbeddingStore(dimension, language);
        continue;
      }
    }
    const int row_dim = static_cast<int>(fields.size()) - 1;
    if (dimension == 0) {
      if (row_dim <= 0) throw FormatError(where() + "row without vector");
      dimension = row_dim;
      store = EmbeddingStore(dimension, language);
    }
    if (row_dim != dimension) {
      throw FormatError(where() + "expected " + std::to_string(dimension) +
                        " values, found " + std::to_string(row_dim));
    }
    values.resize(dimension);
    for (int i = 0; i < dimension; ++i) {
      double v;
      if (!ParseDouble(fields[i + 1], &v)) {
        throw FormatError(where() + "invalid number '" +
                          std::string(fields[i + 1]) + "'");
      }
      values[i] = static_cast<float>(v);
    }
    std::string word(fields[0]);
    if (lowercase) word = AsciiLower(word);
    store.Add(std::move(word), values);
  }
  if (dimension == 0) {
    throw FormatError(std::string(source) + ": empty embedding file");
  }
  return store;
}

EmbeddingStore LoadEmbeddings(const std::string &path, std::string language,
                              bool lowercase) {
  return ParseEmbeddings(ReadFile(path), std::move(language), lowercase, path);
}

BilingualDictionary::BilingualDictionary(std::string source_language,
                                         std::string target_language,
                                         bool lowercase)
    : source_language_(std::move(source_language)),
      target_language_(std::move(target_language)),
      lowercase_(lowercase) {}

std::string BilingualDictionary::Key(std::string_view word) const {
  return lowercase_ ? AsciiLower(word) : std::string(word);
}

void BilingualDictionary::Add(std::string_view source,
                              std::string_view target) {
  std::vector<std::string> &targets = entries_[Key(source)];
  std::string t = lowercase_ ? AsciiLower(target) : std::string(target);
  if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
    targets.push_back(std::move(t));
  }
}

std::optional<std::string> BilingualDictionary::Translate(
    std::string_view word) const {
  const std::vector<std::string> *targets = Targets(word);
  if (targets == nullptr || targets->empty()) return std::nullopt;
  return targets->front();
}

const std::vector<std::string> *BilingualDictionary::Targets(
    std::string_view word) const {
  auto it = entries_.find(Key(word));
  return it == entries_.end() ? nullptr : &it->second;
}

BilingualDictionary ParseDictionary(std::string_view text,
                                    std::string source_language,
                                    std::string target_language,
                                    bool lowercase, std::string_view source) {
  BilingualDictionary dict(std::move(source_language),
                           std::move(target_language), lowercase);
  int line_no = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) continue;
    std::vector<std::string_view> cols = Split(line, '\t');
    if (cols.size() != 2 || Trim(cols[0]).empty() || Trim(cols[1]).empty()) {
      throw FormatError(std::string(source) + ":" + std::to_string(line_no) +
                        ": expected 'source<TAB>target'");
    }
    dict.Add(Trim(cols[0]), Trim(cols[1]));
  }
  return dict;
}

BilingualDictionary LoadDictionary(const std::string &path,
                                   std::string source_language,
                                   std::string target_language,
                                   bool lowercase) {
  return ParseDictionary(ReadFile(path), std::move(source_language),
                         std::move(target_language), lowercase, path);
}

namespace {

template <typename T>
double CosineImpl(std::span<const T> u, std::span<const T> v) {
  if (u.size() != v.size()) {
    throw ArgumentError("cosine of vectors with dimensions " +
                        std::to_string(u.size()) + " and " +
                        std::to_string(v.size()));
  }
  double dot = 0, nu = 0, nv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    dot += double(u[i]) * double(v[i]);
    nu += double(u[i]) * double(u[i]);
    nv += double(v[i]) * double(v[i]);
  }
  if (nu == 0 || nv == 0) return 0.0;
  double c = dot / (std::sqrt(nu) * std::sqrt(nv));
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace

double Cosine(std::span<const double> u, std::span<const double> v) {
  return CosineImpl(u, v);
}

double Cosine(std::span<const float> u, std::span<const float> v) {
  return CosineImpl(u, v);
}

WordEmbedder::WordEmbedder(const LexicalResources *resources,
                           EmbedderOptions options)
    : resources_(resources), options_(std::move(options)) {}

const EmbeddingStore &WordEmbedder::Store(std::string_view language) const {
  std::string lang(language);
  if (options_.mode == EmbeddingMode::kPivotTranslate) {
    lang = options_.pivot_language;
  }
  if (resources_ == nullptr || !resources_->stores.count(lang)) {
    throw ConfigError("embeddings: no embedding store for language '" + lang +
                      "'");
  }
  return resources_->stores.at(lang);
}

const BilingualDictionary &WordEmbedder::Dictionary(
    std::string_view language) const {
  auto key = std::make_pair(std::string(language), options_.pivot_language);
  if (resources_ == nullptr || !resources_->dictionaries.count(key)) {
    throw ConfigError("dictionaries: no dictionary from '" + key.first +
                      "' to '" + key.second + "'");
  }
  return resources_->dictionaries.at(key);
}

int WordEmbedder::Dimension(std::string_view language) const {
  return Store(language).dimension();
}

std::optional<std::vector<double>> WordEmbedder::LookupInStore(
    const EmbeddingStore &store, const std::string &word) const {
  std::span<const float> hit = store.Find(word);
  if (hit.empty() && word.find(' ') != std::string::npos) {
    std::string joined = word;
    std::replace(joined.begin(), joined.end(), ' ', '_');
    hit = store.Find(joined);
  }
  if (!hit.empty()) return std::vector<double>(hit.begin(), hit.end());
  if (word.find(' ') == std::string::npos) return std::nullopt;
  // Mean of the parts that are in vocabulary.
  std::vector<double> sum(store.dimension(), 0.0);
  int found = 0;
  for (std::string_view part : SplitWhitespace(word)) {
    std::span<const float> v = store.Find(part);
    if (v.empty()) continue;
    for (size_t i = 0; i < v.size(); ++i) sum[i] += v[i];
    ++found;
  }
  if (found == 0) return std::nullopt;
  for (double &x : sum) x /= found;
  return sum;
}

std::optional<std::vector<double>> WordEmbedder::Lookup(
    std::string_view word, std::string_view language) const {
  std::string key = options_.lowercase ? AsciiLower(word) : std::string(word);
  const EmbeddingStore &store = Store(language);
  if (options_.mode == EmbeddingMode::kPerLanguage ||
      language == options_.pivot_language) {
    return LookupInStore(store, key);
  }
  const BilingualDictionary &dict = Dictionary(language);
  if (std::optional<std::string> t = dict.Translate(key)) {
    return LookupInStore(store, *t);
  }
  if (key.find(' ') == std::string::npos) return std::nullopt;
  std::vector<double> sum(store.dimension(), 0.0);
  int found = 0;
  for (std::string_view part : SplitWhitespace(key)) {
    std::optional<std::string> t = dict.Translate(part);
    if (!t) continue;
    std::optional<std::vector<double>> v = LookupInStore(store, *t);
    if (!v) continue;
    for (size_t i = 0; i < v->size(); ++i) sum[i] += (*v)[i];
    ++found;
  }
  if (found == 0) return std::nullopt;
  for (double &x : sum) x /= found;
  return sum;
}

EmbedderOptions EmbedderOptionsFor(const SigmaConfig &config,
                                   std::string pivot_language, bool lowercase) {
  EmbedderOptions options;
  options.mode = config.mode == SigmaMode::kTranslateThenCompare
                     ? EmbeddingMode::kPivotTranslate
                     : EmbeddingMode::kPerLanguage;
  options.pivot_language = std::move(pivot_language);
  options.lowercase = lowercase;
  return options;
}

double SigmaValue(const SigmaConfig &config, const SigmaNode &a,
                  const SigmaNode &b) {
  if (config.mode == SigmaMode::kLabelIndicator) {
    return a.label == b.label ? 1.0 : 0.0;
  }
  if (a.kind != b.kind) return 0.0;
  if (a.kind == NodeKind::kSyntactic) return a.label == b.label ? 1.0 : 0.0;
  if (config.pos_must_match && a.pos != b.pos) return 0.0;
  if (a.unit_vector.empty() || b.unit_vector.empty()) {
    if (config.oov_policy == OovPolicy::kExactMatchFallback) {
      return a.label == b.label ? 1.0 : 0.0;
    }
    return 0.0;
  }
  if (a.unit_vector.size() != b.unit_vector.size()) {
    throw ArgumentError("sigma: word vectors of dimension " +
                        std::to_string(a.unit_vector.size()) + " and " +
                        std::to_string(b.unit_vector.size()) +
                        " are not comparable");
  }
  double dot = 0;
  for (size_t i = 0; i < a.unit_vector.size(); ++i) {
    dot += a.unit_vector[i] * b.unit_vector[i];
  }
  return std::clamp(dot, 0.0, 1.0);
}

std::vector<double> UnitVector(std::span<const double> v) {
  double norm = 0;
  for (double x : v) norm += x * x;
  if (norm == 0) return {};
  norm = std::sqrt(norm);
  std::vector<double> out(v.begin(), v.end());
  for (double &x : out) x /= norm;
  return out;
}

NodeSimilarity::NodeSimilarity(SigmaConfig config, const WordEmbedder *embedder)
    : config_(config), embedder_(embedder) {
  if (config_.mode != SigmaMode::kLabelIndicator && embedder_ == nullptr) {
    throw ConfigError("embeddings: node similarity needs word embeddings");
  }
}

std::vector<double> NodeSimilarity::ResolveUnitVector(
    const LabeledTree &node, std::string_view language) const {
  if (config_.mode == SigmaMode::kLabelIndicator ||
      node.kind != NodeKind::kLexical) {
    return {};
  }
  std::optional<std::vector<double>> v = embedder_->Lookup(node.label, language);
  if (!v) return {};
  return UnitVector(*v);
}

double NodeSimilarity::Sigma(const LabeledTree &a, std::string_view lang_a,
                             const LabeledTree &b,
                             std::string_view lang_b) const {
  std::vector<double> ua = ResolveUnitVector(a, lang_a);
  std::vector<double> ub = ResolveUnitVector(b, lang_b);
  SigmaNode na{a.label, a.kind, a.pos_tag, ua};
  SigmaNode nb{b.label, b.kind, b.pos_tag, ub};
  return SigmaValue(config_, na, nb);
}

}  // namespace udtk
