#include "copermanent/survey.hpp"

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>

#include "copermanent/engine.hpp"
#include "copermanent/enumerate.hpp"
#include "copermanent/error.hpp"

namespace copermanent {

namespace {

Error with_graph(const Error& e, const std::string& graph6) {
  return Error(e.kind(), std::string(e.what()) + " [graph " + graph6 + "]");
}

// Work produced by one worker for one batch. `error` is set instead of
// `records` when the batch failed.
struct BatchResult {
  std::vector<SurveyRecord> records;
  std::exception_ptr error;
};

class ResultQueue {
 public:
  void push(BatchResult result) {
    {
      std::lock_guard lock(mutex_);
      items_.push_back(std::move(result));
    }
    ready_.notify_one();
  }

  void finish_producer() {
    {
      std::lock_guard lock(mutex_);
      ++finished_;
    }
    ready_.notify_one();
  }

  // Blocks until a result arrives or all `producers` are done.
  std::optional<BatchResult> pop(unsigned producers) {
    std::unique_lock lock(mutex_);
    ready_.wait(lock, [&] { return !items_.empty() || finished_ == producers; });
    if (items_.empty()) return std::nullopt;
    BatchResult out = std::move(items_.front());
    items_.pop_front();
    return out;
  }

 private:
  std::mutex mutex_;
  std::condition_variable ready_;
  std::deque<BatchResult> items_;
  unsigned finished_ = 0;
};

}  // namespace

GraphSource source_from(const std::vector<Graph>& graphs) {
  return [&graphs, next = std::size_t{0}]() mutable -> std::optional<Graph> {
    if (next == graphs.size()) return std::nullopt;
    return graphs[next++];
  };
}

std::string format_fraction_6dp(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) return "0.000000";
  constexpr UInt128 kScale = 1'000'000;
  const UInt128 scaled = static_cast<UInt128>(numerator) * kScale;
  auto quotient = static_cast<UInt128>(scaled / denominator);
  const UInt128 twice_rem = 2 * (scaled % denominator);
  if (twice_rem > denominator || (twice_rem == denominator && (quotient & 1U) != 0)) ++quotient;
  const auto whole = static_cast<std::uint64_t>(quotient / kScale);
  const auto frac = static_cast<std::uint64_t>(quotient % kScale);
  std::string digits = std::to_string(frac);
  return std::to_string(whole) + "." + std::string(6 - digits.size(), '0') + digits;
}

void SurveyAccumulator::add(SurveyRecord record) {
  if (!graphs_.insert(record.graph6).second) {
    throw Error(ErrorKind::DuplicateGraph,
                "graph " + record.graph6 + " (or an isomorphic copy) appears twice");
  }
  groups_[std::move(record.fingerprint)].push_back(std::move(record.graph6));
}

SurveyReport SurveyAccumulator::report(int order) const {
  SurveyReport report;
  report.order = order;
  report.num_graphs = graphs_.size();
  report.num_polynomials = groups_.size();
  for (const auto& [fp, members] : groups_) {
    report.max_family = std::max<std::uint64_t>(report.max_family, members.size());
    if (members.size() < 2) continue;
    report.num_with_mate += members.size();
    CopermanentFamily family{fp, members, from_fingerprint_bytes(fp.bytes)};
    std::sort(family.members.begin(), family.members.end());
    report.families.push_back(std::move(family));
  }
  std::sort(report.families.begin(), report.families.end(),
            [](const auto& a, const auto& b) { return a.fingerprint.bytes < b.fingerprint.bytes; });
  report.fraction_with_mate = format_fraction_6dp(report.num_with_mate, report.num_graphs);
  return report;
}

namespace {

std::string record_name(const Graph& g) {
  return g.order() <= kMaxCanonicalOrder ? canonical_form(g).canonical_g6 : to_graph6(g);
}

SurveyRecord record_for(const Graph& g, std::string graph6) {
  try {
    return {graph6, fingerprint(bivariate_permanent(g))};
  } catch (const Error& e) {
    throw with_graph(e, graph6);
  }
}

}  // namespace

SurveyRecord survey_record(const Graph& g) { return record_for(g, record_name(g)); }

SurveyReport run_survey(const GraphSource& source, int order, const SurveyOptions& options,
                        SurveyAccumulator seed) {
  const std::unordered_set<std::string> known = seed.graphs();
  const std::size_t batch_size = std::max<std::size_t>(options.batch_size, 1);

  auto compute = [&](const std::vector<Graph>& batch) {
    std::vector<SurveyRecord> records;
    records.reserve(batch.size());
    for (const Graph& g : batch) {
      if (g.order() != order) {
        throw Error(ErrorKind::OrderMismatch, "graph " + to_graph6(g) + " has order " +
                                                  std::to_string(g.order()) + ", expected " +
                                                  std::to_string(order));
      }
      std::string name = record_name(g);
      if (known.contains(name)) continue;
      records.push_back(record_for(g, std::move(name)));
    }
    return records;
  };

  auto absorb = [&](std::vector<SurveyRecord>& records) {
    if (options.on_records) options.on_records(records);
    for (auto& r : records) seed.add(std::move(r));
  };

  auto pull = [&](std::vector<Graph>& batch) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto g = source();
      if (!g) break;
      batch.push_back(std::move(*g));
    }
    return !batch.empty();
  };

  const unsigned workers = std::max(options.workers, 1U);
  if (workers == 1) {
    std::vector<Graph> batch;
    while (pull(batch)) {
      auto records = compute(batch);
      absorb(records);
    }
    return seed.report(order);
  }

  std::mutex source_mutex;
  bool source_failed = false;
  ResultQueue results;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      std::vector<Graph> batch;
      for (;;) {
        BatchResult result;
        try {
          {
            std::lock_guard lock(source_mutex);
            if (source_failed || !pull(batch)) break;
          }
          result.records = compute(batch);
        } catch (...) {
          {
            std::lock_guard lock(source_mutex);
            source_failed = true;
          }
          result.error = std::current_exception();
        }
        const bool failed = result.error != nullptr;
        results.push(std::move(result));
        if (failed) break;
      }
      results.finish_producer();
    });
  }

  std::exception_ptr first_error;
  while (auto result = results.pop(workers)) {
    if (result->error) {
      if (!first_error) first_error = result->error;
      continue;
    }
    if (first_error) continue;
    try {
      absorb(result->records);
    } catch (...) {
      first_error = std::current_exception();
      std::lock_guard lock(source_mutex);
      source_failed = true;
    }
  }
  pool.clear();
  if (first_error) std::rethrow_exception(first_error);
  return seed.report(order);
}

void write_checkpoint(std::span<const SurveyRecord> records, std::ostream& out) {
  for (const auto& r : records) out << r.graph6 << '\t' << to_hex(r.fingerprint) << '\n';
}

std::vector<SurveyRecord> read_checkpoint(std::istream& in) {
  std::vector<SurveyRecord> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    const auto tab = text.find('\t');
    if (tab == std::string::npos || tab == 0 || text.find('\t', tab + 1) != std::string::npos) {
      throw LineError(ErrorKind::MalformedRecord, line, "checkpoint: expected graph6<TAB>hex");
    }
    SurveyRecord record;
    record.graph6 = text.substr(0, tab);
    try {
      (void)from_graph6(record.graph6);
      record.fingerprint = fingerprint_from_hex(std::string_view(text).substr(tab + 1));
    } catch (const Error& e) {
      throw LineError(ErrorKind::MalformedRecord, line, std::string("checkpoint: ") + e.what());
    }
    out.push_back(std::move(record));
  }
  return out;
}

SurveyReport run_survey_checkpointed(const GraphSource& source, int order,
                                     const SurveyOptions& options,
                                     const std::filesystem::path& checkpoint) {
  SurveyAccumulator seed;
  if (std::filesystem::exists(checkpoint)) {
    std::ifstream in(checkpoint);
    if (!in) throw Error(ErrorKind::MalformedRecord, "cannot read " + checkpoint.string());
    for (auto& record : read_checkpoint(in)) {
      if (record.fingerprint.bytes[0] != order) {
        throw Error(ErrorKind::OrderMismatch, "checkpoint record " + record.graph6 +
                                                  " is for order " +
                                                  std::to_string(record.fingerprint.bytes[0]));
      }
      seed.add(std::move(record));
    }
  }

  std::ofstream out(checkpoint, std::ios::app);
  if (!out) throw Error(ErrorKind::MalformedRecord, "cannot write " + checkpoint.string());
  SurveyOptions with_sink = options;
  with_sink.on_records = [&](std::span<const SurveyRecord> records) {
    write_checkpoint(records, out);
    out.flush();
    if (options.on_records) options.on_records(records);
  };
  return run_survey(source, order, with_sink, std::move(seed));
}

}  // namespace copermanent
