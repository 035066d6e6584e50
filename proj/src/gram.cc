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

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

#include "json_util.h"
#include "udtk/error.h"
#include "udtk/learn.h"
#include "udtk/util.h"

namespace udtk {

namespace {

// Runs body(worker, index) for index in [0, count) on `threads` threads.
// Indices are claimed from a shared counter. If any call throws, the
// exception of the smallest failing index is rethrown.
template <typename Body>
void ParallelFor(int count, int threads, Body body) {
  threads = std::max(1, std::min(threads, count));
  std::atomic<int> next{0};
  std::mutex mu;
  int failed_index = count;
  std::exception_ptr failure;
  auto run = [&](int worker) {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(worker, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < failed_index) {
          failed_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(run, t);
    for (std::thread &t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

std::string PairContext(const PreparedInstance &a, const PreparedInstance &b) {
  return "instances '" + a.id + "' and '" + b.id + "': ";
}

std::vector<std::unique_ptr<KernelWorker>> MakeWorkers(
    const KernelSpec &spec, int threads, TreeKernelCache *cache) {
  std::vector<std::unique_ptr<KernelWorker>> workers;
  for (int t = 0; t < threads; ++t) {
    workers.push_back(std::make_unique<KernelWorker>(spec, cache));
  }
  return workers;
}

}  // namespace

GramMatrix GramMatrix::Square(int n, std::vector<double> values) {
  if (values.size() != static_cast<size_t>(n) * n) {
    throw ArgumentError("square matrix of order " + std::to_string(n) +
                        " needs " + std::to_string(n * n) + " values");
  }
  GramMatrix g;
  g.rows = g.cols = n;
  g.values = std::move(values);
  for (int i = 0; i < n; ++i) g.row_ids.push_back(std::to_string(i));
  g.col_ids = g.row_ids;
  return g;
}

int ResolveThreads(int threads) {
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void ComputeSelfKernels(const KernelSpec &spec,
                        std::vector<PreparedInstance> *instances,
                        int threads) {
  threads = ResolveThreads(threads);
  auto workers = MakeWorkers(spec, threads, nullptr);
  ParallelFor(static_cast<int>(instances->size()), threads,
              [&](int w, int i) {
                PreparedInstance &p = (*instances)[i];
                try {
                  workers[w]->ComputeSelf(&p);
                } catch (const Error &e) {
                  RethrowWithContext(e, "instance '" + p.id + "': ");
                }
              });
}

GramMatrix ComputeGram(const KernelSpec &spec,
                       const std::vector<PreparedInstance> &instances,
                       int threads, TreeKernelCache *cache) {
  threads = ResolveThreads(threads);
  const int n = static_cast<int>(instances.size());
  GramMatrix g;
  g.rows = g.cols = n;
  g.values.assign(static_cast<size_t>(n) * n, 0.0);
  for (const PreparedInstance &p : instances) g.row_ids.push_back(p.id);
  g.col_ids = g.row_ids;
  g.fingerprint = Fingerprint(spec);
  auto workers = MakeWorkers(spec, threads, cache);
  ParallelFor(n, threads, [&](int w, int i) {
    for (int j = i; j < n; ++j) {
      double v;
      try {
        v = workers[w]->Evaluate(instances[i], instances[j]);
      } catch (const Error &e) {
        RethrowWithContext(e, PairContext(instances[i], instances[j]));
      }
      g.values[static_cast<size_t>(i) * n + j] = v;
      g.values[static_cast<size_t>(j) * n + i] = v;
    }
  });
  return g;
}

GramMatrix ComputeCross(const KernelSpec &spec,
                        const std::vector<PreparedInstance> &rows,
                        const std::vector<PreparedInstance> &cols,
                        int threads, TreeKernelCache *cache) {
  threads = ResolveThreads(threads);
  GramMatrix g;
  g.rows = static_cast<int>(rows.size());
  g.cols = static_cast<int>(cols.size());
  g.values.assign(static_cast<size_t>(g.rows) * g.cols, 0.0);
  for (const PreparedInstance &p : rows) g.row_ids.push_back(p.id);
  for (const PreparedInstance &p : cols) g.col_ids.push_back(p.id);
  g.fingerprint = Fingerprint(spec);
  auto workers = MakeWorkers(spec, threads, cache);
  ParallelFor(g.rows, threads, [&](int w, int i) {
    for (int j = 0; j < g.cols; ++j) {
      try {
        g.values[static_cast<size_t>(i) * g.cols + j] =
            workers[w]->Evaluate(rows[i], cols[j]);
      } catch (const Error &e) {
        RethrowWithContext(e, PairContext(rows[i], cols[j]));
      }
    }
  });
  return g;
}

std::string GramToTsv(const GramMatrix &gram) {
  std::string out;
  char buf[32];
  for (int i = 0; i < gram.rows; ++i) {
    for (int j = 0; j < gram.cols; ++j) {
      if (j > 0) out += '\t';
      std::snprintf(buf, sizeof(buf), "%.17g", gram.at(i, j));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string GramToBinary(const GramMatrix &gram) {
  static_assert(sizeof(double) == 8);
  std::string out = "UDTKGRAM";
  auto put32 = [&](uint32_t v) {
    for (int k = 0; k < 4; ++k) out += static_cast<char>((v >> (8 * k)) & 0xff);
  };
  put32(static_cast<uint32_t>(gram.rows));
  put32(static_cast<uint32_t>(gram.cols));
  for (double d : gram.values) {
    uint64_t bits;
    std::memcpy(&bits, &d, 8);
    for (int k = 0; k < 8; ++k) {
      out += static_cast<char>((bits >> (8 * k)) & 0xff);
    }
  }
  return out;
}

GramMatrix GramFromTsv(std::string_view text) {
  GramMatrix g;
  int line_no = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<std::string_view> cells = Split(line, '\t');
    if (g.rows == 0) g.cols = static_cast<int>(cells.size());
    if (static_cast<int>(cells.size()) != g.cols) {
      throw FormatError("gram line " + std::to_string(line_no) + ": expected " +
                        std::to_string(g.cols) + " values, found " +
                        std::to_string(cells.size()));
    }
    for (std::string_view c : cells) {
      double v;
      if (!ParseDouble(Trim(c), &v)) {
        throw FormatError("gram line " + std::to_string(line_no) +
                          ": bad number '" + std::string(c) + "'");
      }
      g.values.push_back(v);
    }
    ++g.rows;
  }
  return g;
}

GramMatrix GramFromBinary(std::string_view bytes) {
  if (bytes.size() < 16 || bytes.substr(0, 8) != "UDTKGRAM") {
    throw FormatError("not a binary gram file");
  }
  auto get32 = [&](size_t at) {
    uint32_t v = 0;
    for (int k = 0; k < 4; ++k) {
      v |= static_cast<uint32_t>(static_cast<unsigned char>(bytes[at + k]))
           << (8 * k);
    }
    return v;
  };
  GramMatrix g;
  g.rows = static_cast<int>(get32(8));
  g.cols = static_cast<int>(get32(12));
  const size_t count = static_cast<size_t>(g.rows) * g.cols;
  if (bytes.size() != 16 + 8 * count) {
    throw FormatError("binary gram file is truncated");
  }
  g.values.resize(count);
  for (size_t i = 0; i < count; ++i) {
    uint64_t bits = 0;
    for (int k = 0; k < 8; ++k) {
      bits |= static_cast<uint64_t>(
                  static_cast<unsigned char>(bytes[16 + 8 * i + k]))
              << (8 * k);
    }
    std::memcpy(&g.values[i], &bits, 8);
  }
  return g;
}

std::string GramManifest(const GramMatrix &gram, const KernelSpec &spec,
                         const std::string &format) {
  Json j;
  j["fingerprint"] = Fingerprint(spec);
  j["kernel_spec"] = ToJson(spec);
  j["format"] = format;
  j["rows"] = gram.rows;
  j["cols"] = gram.cols;
  j["row_ids"] = gram.row_ids;
  j["col_ids"] = gram.col_ids;
  return j.dump(2) + "\n";
}

}  // namespace udtk
