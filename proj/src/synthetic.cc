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

#include "udtk/synthetic.h"

#include <cstdio>
#include <filesystem>
#include <random>
#include <set>
#include <vector>

#include "udtk/error.h"
#include "udtk/util.h"

namespace udtk {

namespace {

using Rng = std::mt19937_64;

const std::string &Pick(Rng &rng, const std::vector<std::string> &items) {
  return items[rng() % items.size()];
}

// Tokens refer to their heads by key; keys resolve to surface positions
// when the sentence is rendered.
struct Word {
  std::string key;
  std::string form;
  std::string lemma;
  std::string upos;
  std::string head;  // key of the head, "" for the root
  std::string deprel;
  std::string misc;
};

class Sentence {
 public:
  void Add(std::string key, std::string form, std::string lemma,
           std::string upos, std::string head, std::string deprel,
           std::string misc = "") {
    words_.push_back({std::move(key), std::move(form), std::move(lemma),
                      std::move(upos), std::move(head), std::move(deprel),
                      std::move(misc)});
  }

  // "the [adj] noun" headed by `key`; returns its bracketed NP.
  std::string Np(const std::string &key, const std::string &noun,
                 const std::string &adj, const std::string &head,
                 const std::string &deprel, const std::string &misc = "") {
    Add(key + ".det", "the", "the", "DET", key, "det");
    std::string np = "(NP (DT the)";
    if (!adj.empty()) {
      Add(key + ".amod", adj, adj, "ADJ", key, "amod");
      np += " (JJ " + adj + ")";
    }
    Add(key, noun, noun, "NOUN", head, deprel, misc);
    return np + " (NN " + noun + "))";
  }

  std::string Conllu(const std::string &id,
                     const std::vector<std::string> &extra = {}) const {
    std::string out = "# sent_id = " + id + "\n";
    for (const std::string &e : extra) out += "# " + e + "\n";
    std::vector<std::string> forms;
    for (const Word &w : words_) forms.push_back(w.form);
    out += "# text = " + Join(forms, " ") + "\n";
    for (size_t i = 0; i < words_.size(); ++i) {
      const Word &w = words_[i];
      int head = 0;
      if (!w.head.empty()) {
        for (size_t j = 0; j < words_.size(); ++j) {
          if (words_[j].key == w.head) head = static_cast<int>(j) + 1;
        }
      }
      out += std::to_string(i + 1) + "\t" + w.form + "\t" + w.lemma + "\t" +
             w.upos + "\t_\t_\t" + std::to_string(head) + "\t" + w.deprel +
             "\t_\t" + (w.misc.empty() ? "_" : w.misc) + "\n";
    }
    return out + "\n";
  }

 private:
  std::vector<Word> words_;
};

// ---------------------------------------------------------------------------
// Paraphrase pairs.

struct PiFill {
  std::string n1, n2, obj, city;
};

const std::vector<std::string> kTrainNames = {
    "Federer", "Nadal",  "Djokovic", "Murray",  "Agassi",
    "Sampras", "Borg",   "McEnroe",  "Seles",   "Graf"};
const std::vector<std::string> kTestNames = {
    "Alcaraz", "Sinner", "Medvedev", "Zverev", "Federer", "Nadal", "Borg"};
const std::vector<std::string> kObjects = {"book",   "letter", "report",
                                           "song",   "poem",   "note",
                                           "review", "story"};
const std::vector<std::string> kCities = {"Paris", "London", "Tehran",
                                          "Rome",  "Madrid", "Berlin"};

constexpr int kPiTemplates = 4;

// Active-voice variant of template k.
Sentence PiActive(int k, const PiFill &f) {
  Sentence s;
  switch (k) {
    case 0:
      s.Add("n1", f.n1, f.n1, "PROPN", "v", "nsubj");
      s.Add("v", "beat", "beat", "VERB", "", "root");
      s.Add("n2", f.n2, f.n2, "PROPN", "v", "obj");
      break;
    case 1:
      s.Add("n1", f.n1, f.n1, "PROPN", "v", "nsubj");
      s.Add("v", "gave", "give", "VERB", "", "root");
      s.Add("n2", f.n2, f.n2, "PROPN", "v", "iobj");
      s.Add("det", "the", "the", "DET", "o", "det");
      s.Add("o", f.obj, f.obj, "NOUN", "v", "obj");
      break;
    case 2:
      s.Add("n1", f.n1, f.n1, "PROPN", "v", "nsubj");
      s.Add("v", "lives", "live", "VERB", "", "root");
      s.Add("case", "in", "in", "ADP", "c", "case");
      s.Add("c", f.city, f.city, "PROPN", "v", "obl");
      break;
    default:
      s.Add("n1", f.n1, f.n1, "PROPN", "v", "nsubj");
      s.Add("adv", "quickly", "quickly", "ADV", "v", "advmod");
      s.Add("v", "wrote", "write", "VERB", "", "root");
      s.Add("det", "a", "a", "DET", "o", "det");
      s.Add("o", f.obj, f.obj, "NOUN", "v", "obj");
      break;
  }
  s.Add("punct", ".", ".", "PUNCT", "v", "punct");
  return s;
}

// Alternate construction of template k with the same fillers.
Sentence PiAlternate(int k, const PiFill &f) {
  Sentence s;
  switch (k) {
    case 0:
      s.Add("n2", f.n2, f.n2, "PROPN", "v", "nsubj:pass");
      s.Add("aux", "was", "be", "AUX", "v", "aux:pass");
      s.Add("v", "beaten", "beat", "VERB", "", "root");
      s.Add("by", "by", "by", "ADP", "n1", "case");
      s.Add("n1", f.n1, f.n1, "PROPN", "v", "obl");
      break;
    case 1:
      s.Add("det", "the", "the", "DET", "o", "det");
      s.Add("o", f.obj, f.obj, "NOUN", "v", "nsubj:pass");
      s.Add("aux", "was", "be", "AUX", "v", "aux:pass");
      s.Add("v", "given", "give", "VERB", "", "root");
      s.Add("to", "to", "to", "ADP", "n2", "case");
      s.Add("n2", f.n2, f.n2, "PROPN", "v", "obl");
      s.Add("by", "by", "by", "ADP", "n1", "case");
      s.Add("n1", f.n1, f.n1, "PROPN", "v", "obl");
      break;
    case 2:
      s.Add("c", f.city, f.city, "PROPN", "v", "nsubj");
      s.Add("cop", "is", "be", "AUX", "v", "cop");
      s.Add("det", "the", "the", "DET", "v", "det");
      s.Add("v", "home", "home", "NOUN", "", "root");
      s.Add("of", "of", "of", "ADP", "n1", "case");
      s.Add("n1", f.n1, f.n1, "PROPN", "v", "nmod");
      break;
    default:
      s.Add("det", "a", "a", "DET", "o", "det");
      s.Add("o", f.obj, f.obj, "NOUN", "v", "nsubj:pass");
      s.Add("aux", "was", "be", "AUX", "v", "aux:pass");
      s.Add("adv", "quickly", "quickly", "ADV", "v", "advmod");
      s.Add("v", "written", "write", "VERB", "", "root");
      s.Add("by", "by", "by", "ADP", "n1", "case");
      s.Add("n1", f.n1, f.n1, "PROPN", "v", "obl");
      break;
  }
  s.Add("punct", ".", ".", "PUNCT", "v", "punct");
  return s;
}

// Unrelated constructions paired with an active sentence in negative
// pairs.
Sentence PiDistractor(int k, const PiFill &f) {
  Sentence s;
  switch (k) {
    case 0:
      s.Add("n2", f.n2, f.n2, "PROPN", "v", "nsubj");
      s.Add("v", "slept", "sleep", "VERB", "", "root");
      break;
    case 1:
      s.Add("det", "the", "the", "DET", "o", "det");
      s.Add("o", f.obj, f.obj, "NOUN", "v", "nsubj");
      s.Add("cop", "is", "be", "AUX", "v", "cop");
      s.Add("v", "red", "red", "ADJ", "", "root");
      break;
    case 2:
      s.Add("aux", "did", "do", "AUX", "v", "aux");
      s.Add("n1", f.n1, f.n1, "PROPN", "v", "nsubj");
      s.Add("v", "call", "call", "VERB", "", "root");
      s.Add("n2", f.n2, f.n2, "PROPN", "v", "obj");
      s.Add("punct", "?", "?", "PUNCT", "v", "punct");
      return s;
    default:
      s.Add("n1", f.n1, f.n1, "PROPN", "v", "nsubj");
      s.Add("cc", "and", "and", "CCONJ", "n2", "cc");
      s.Add("n2", f.n2, f.n2, "PROPN", "n1", "conj");
      s.Add("v", "met", "meet", "VERB", "", "root");
      s.Add("case", "in", "in", "ADP", "c", "case");
      s.Add("c", f.city, f.city, "PROPN", "v", "obl");
      break;
  }
  s.Add("punct", ".", ".", "PUNCT", "v", "punct");
  return s;
}

PiFill RandomFill(Rng &rng, const std::vector<std::string> &names) {
  PiFill f;
  f.n1 = Pick(rng, names);
  do {
    f.n2 = Pick(rng, names);
  } while (f.n2 == f.n1);
  f.obj = Pick(rng, kObjects);
  f.city = Pick(rng, kCities);
  return f;
}

void PiSplit(Rng &rng, const std::string &split, int pairs,
             const std::vector<std::string> &names, SyntheticCorpus *out) {
  std::string conllu, tsv = "# label\tsentence a\tsentence b\n";
  for (int i = 0; i < pairs; ++i) {
    const bool positive = i % 2 == 0;
    const int slot = i / 2;
    // Positives pair template k with its own alternate; negatives pair it
    // with a distractor, cycling through all (k, distractor) combinations.
    const int combo = slot % (kPiTemplates * kPiTemplates);
    const int ka = positive ? slot % kPiTemplates : combo / kPiTemplates;
    const int kb = combo % kPiTemplates;
    PiFill fa = RandomFill(rng, names);
    PiFill fb = positive ? fa : RandomFill(rng, names);
    const std::string n = std::to_string(i + 1);
    const std::string ida = "pi-" + split + "-" + n + "a";
    const std::string idb = "pi-" + split + "-" + n + "b";
    conllu += PiActive(ka, fa).Conllu(ida);
    conllu += (positive ? PiAlternate(ka, fb) : PiDistractor(kb, fb))
                  .Conllu(idb);
    tsv += std::string(positive ? "1" : "0") + "\t" + ida + "\t" + idb + "\n";
  }
  (*out)[split + ".conllu"] = conllu;
  (*out)[split + ".pairs"] = tsv;
}

// ---------------------------------------------------------------------------
// Relation instances.

const std::vector<std::string> kTrainNouns = {
    "virus", "fever", "storm",  "flood", "fire",      "smoke",
    "crash", "delay", "leak",   "damage", "drought",  "famine",
    "spark", "quake", "infection", "pollution"};
const std::vector<std::string> kTestNouns = {
    "blizzard", "outage", "riot",  "collapse", "surge", "rust",
    "virus",    "storm",  "flood", "spark"};
const std::vector<std::string> kAdjectives = {"big", "sudden", "small",
                                              "severe", "minor"};
const std::vector<std::string> kReLabels = {
    "Cause-Effect(e1,e2)", "Cause-Effect(e2,e1)", "Other"};

std::string MaybeAdjective(Rng &rng) {
  return rng() % 3 == 0 ? Pick(rng, kAdjectives) : "";
}

// Returns the sentence and its bracketed constituency tree.
std::pair<Sentence, std::string> ReSentence(Rng &rng, int cls,
                                            const std::string &x,
                                            const std::string &y) {
  Sentence s;
  std::string adj1 = MaybeAdjective(rng), adj2 = MaybeAdjective(rng);
  std::string np1 = s.Np("e1", x, adj1, "v", cls == 1 ? "nsubj:pass" : "nsubj",
                         "Entity=e1");
  std::string vp;
  switch (cls) {
    case 0: {
      s.Add("v", "caused", "cause", "VERB", "", "root");
      std::string np2 = s.Np("e2", y, adj2, "v", "obj", "Entity=e2");
      vp = "(VP (VBD caused) " + np2 + ")";
      break;
    }
    case 1: {
      s.Add("aux", "was", "be", "AUX", "v", "aux:pass");
      s.Add("v", "caused", "cause", "VERB", "", "root");
      s.Add("by", "by", "by", "ADP", "e2", "case");
      std::string np2 = s.Np("e2", y, adj2, "v", "obl", "Entity=e2");
      vp = "(VP (VBD was) (VP (VBN caused) (PP (IN by) " + np2 + ")))";
      break;
    }
    default: {
      s.Add("v", "sat", "sit", "VERB", "", "root");
      s.Add("near", "near", "near", "ADP", "e2", "case");
      std::string np2 = s.Np("e2", y, adj2, "v", "obl", "Entity=e2");
      vp = "(VP (VBD sat) (PP (IN near) " + np2 + "))";
      break;
    }
  }
  s.Add("punct", ".", ".", "PUNCT", "v", "punct");
  return {s, "(S " + np1 + " " + vp + " (. .))"};
}

void ReSplit(Rng &rng, const std::string &split, int count,
             const std::vector<std::string> &nouns, SyntheticCorpus *out) {
  std::string conllu, mrg;
  for (int i = 0; i < count; ++i) {
    const int cls = i % 3;
    std::string x = Pick(rng, nouns), y;
    do {
      y = Pick(rng, nouns);
    } while (y == x);
    auto [sentence, tree] = ReSentence(rng, cls, x, y);
    conllu += sentence.Conllu("re-" + split + "-" + std::to_string(i + 1),
                              {"relation = " + kReLabels[cls]});
    mrg += tree + "\n";
  }
  (*out)[split + ".conllu"] = conllu;
  (*out)[split + ".mrg"] = mrg;
}

std::string RandomVectors(uint64_t seed, const std::set<std::string> &words,
                          int dim) {
  std::string out = std::to_string(words.size()) + " " + std::to_string(dim) +
                    "\n";
  char buf[32];
  for (const std::string &w : words) {
    Rng rng(Fnv1a(w, seed ^ 0x5bd1e995ULL));
    out += w;
    for (int d = 0; d < dim; ++d) {
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
      std::snprintf(buf, sizeof(buf), " %.6f", u);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace

SyntheticCorpus SyntheticPi(uint64_t seed, int train_pairs, int test_pairs) {
  if (train_pairs < 2 || test_pairs < 2) {
    throw ArgumentError("synthetic PI splits need at least 2 pairs");
  }
  Rng rng(seed);
  SyntheticCorpus out;
  PiSplit(rng, "train", train_pairs, kTrainNames, &out);
  PiSplit(rng, "test", test_pairs, kTestNames, &out);
  out["config.json"] =
      "{\n"
      "  \"task\": \"pi\",\n"
      "  \"kernel\": {\"type\": \"sm_tk\", \"m\": 100,\n"
      "             \"tree\": {\"kind\": \"PTK\", \"lambda\": 0.4, "
      "\"mu\": 0.4}},\n"
      "  \"paths\": {\n"
      "    \"train\": {\"conllu\": \"train.conllu\", \"pairs\": "
      "\"train.pairs\"},\n"
      "    \"test\": {\"conllu\": \"test.conllu\", \"pairs\": "
      "\"test.pairs\"}\n"
      "  },\n"
      "  \"svm\": {\"C\": 1.0, \"tol\": 0.001},\n"
      "  \"output\": {\"dir\": \"out\"},\n"
      "  \"seed\": " +
      std::to_string(seed) + "\n}\n";
  return out;
}

SyntheticCorpus SyntheticRe(uint64_t seed, int train_instances,
                            int test_instances) {
  if (train_instances < 3 || test_instances < 3) {
    throw ArgumentError("synthetic RE splits need at least 3 instances");
  }
  Rng rng(seed);
  SyntheticCorpus out;
  ReSplit(rng, "train", train_instances, kTrainNouns, &out);
  ReSplit(rng, "test", test_instances, kTestNouns, &out);
  std::set<std::string> words = {"the", "cause", "caused", "be",   "was",
                                 "by",  "near",  "sit",    "sat",  "."};
  for (const auto *list : {&kTrainNouns, &kTestNouns, &kAdjectives}) {
    words.insert(list->begin(), list->end());
  }
  out["en.vec"] = RandomVectors(seed, words, 8);
  out["config.json"] =
      "{\n"
      "  \"task\": \"re\",\n"
      "  \"kernel\": {\"type\": \"composite\",\n"
      "             \"composite\": {\"variant\": \"CK2\", \"alpha\": 0.23}},\n"
      "  \"paths\": {\n"
      "    \"train\": {\"conllu\": \"train.conllu\", \"constituency\": "
      "\"train.mrg\"},\n"
      "    \"test\": {\"conllu\": \"test.conllu\", \"constituency\": "
      "\"test.mrg\"},\n"
      "    \"embeddings\": {\"en\": \"en.vec\"}\n"
      "  },\n"
      "  \"languages\": {\"train\": \"en\", \"test\": \"en\"},\n"
      "  \"svm\": {\"C\": 1.0, \"tol\": 0.001},\n"
      "  \"output\": {\"dir\": \"out\"},\n"
      "  \"seed\": " +
      std::to_string(seed) + "\n}\n";
  return out;
}

void WriteCorpus(const SyntheticCorpus &corpus, const std::string &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());
  for (const auto &[name, contents] : corpus) {
    WriteFile((std::filesystem::path(dir) / name).string(), contents);
  }
}

}  // namespace udtk
