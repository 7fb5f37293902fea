#include "finconv/mining.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace finconv {

std::optional<InstanceSource> Property::exhaustive(const Bounds&) const { return std::nullopt; }

const Property& find_property(const std::string& name) {
  for (const auto& p : property_registry()) {
    if (p->name() == name) return *p;
  }
  throw PreconditionError("unknown property '" + name + "'");
}

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t fnv(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t fnv(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
  return h;
}

struct Outcome {
  Verdict::Status status = Verdict::Status::Holds;
  std::uint64_t hash = 0;
  std::string detail;    // violations only
  std::string document;  // violations only
};

char status_char(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Holds: return 'h';
    case Verdict::Status::Violated: return 'v';
    case Verdict::Status::NotApplicable: return 'n';
  }
  return '?';
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string MiningReport::text() const {
  std::ostringstream os;
  os << "property: " << property << '\n'
     << "source: " << source << '\n'
     << "instances: " << instances << '\n'
     << "applicable: " << applicable << '\n'
     << "violations: " << violations << '\n'
     << "digest: " << hex(digest) << '\n';
  for (const auto& w : witnesses) {
    os << "witness: " << property << '-' << w.index << ".fcv: " << w.detail << '\n';
  }
  return os.str();
}

MiningReport mine(const MiningTask& task) {
  const Property& prop = find_property(task.property);
  Bounds bounds{task.max_points.value_or(prop.default_max_points()), task.up_to_iso};

  MiningReport report;
  report.property = prop.name();
  InstanceSource source;
  if (task.exhaustive) {
    auto ex = prop.exhaustive(bounds);
    if (!ex) throw PreconditionError("property '" + prop.name() + "' has no exhaustive mode");
    source = std::move(*ex);
    report.source = "exhaustive max-points=" + std::to_string(bounds.max_points) + (bounds.up_to_iso ? " up-to-iso" : "");
  } else {
    const std::uint64_t seed = task.seed;
    source.count = task.count;
    source.make = [&prop, seed, bounds](std::uint64_t i) { return prop.sample(seed, i, bounds); };
    report.source = "sampled seed=" + std::to_string(task.seed) + " count=" + std::to_string(task.count) +
                    " max-points=" + std::to_string(bounds.max_points);
  }

  const std::uint64_t n = source.count;
  std::vector<Outcome> outcomes(n);
  const auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      Outcome& o = outcomes[i];
      Document doc = source.make(i);
      const std::string text = serialize(doc);
      Verdict v;
      try {
        v = prop.check(doc);
      } catch (const std::exception& e) {
        v = Verdict::violated(std::string("check raised: ") + e.what());
      }
      o.status = v.status;
      o.hash = fnv(kFnvOffset, text);
      if (v.status == Verdict::Status::Violated) {
        o.detail = v.detail;
        doc.header = {"# property: " + prop.name(), "# index: " + std::to_string(i), "# detail: " + v.detail};
        o.document = serialize(doc);
      }
    }
  };

  unsigned threads = task.threads ? task.threads : std::max(1u, std::thread::hardware_concurrency());
  if (n < 64) threads = 1;
  if (threads <= 1) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = n * t / threads, hi = n * (t + 1) / threads;
      pool.emplace_back([&, t, lo, hi] {
        try {
          work(lo, hi);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::uint64_t digest = kFnvOffset;
  report.instances = n;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Outcome& o = outcomes[i];
    digest = fnv(digest, o.hash);
    digest = fnv(digest, std::string(1, status_char(o.status)));
    if (o.status != Verdict::Status::NotApplicable) ++report.applicable;
    if (o.status == Verdict::Status::Violated) {
      ++report.violations;
      if (report.witnesses.size() < task.max_witnesses) report.witnesses.push_back({i, o.detail, o.document});
    }
  }
  report.digest = digest;

  if (task.out_dir && !report.witnesses.empty()) {
    std::filesystem::create_directories(*task.out_dir);
    for (const auto& w : report.witnesses) {
      const auto path = std::filesystem::path(*task.out_dir) / (prop.name() + "-" + std::to_string(w.index) + ".fcv");
      std::ofstream out(path, std::ios::binary);
      if (!out) throw PreconditionError("cannot write '" + path.string() + "'");
      out << w.document;
    }
  }
  return report;
}

Verdict replay(const Document& doc, const std::string& property) {
  const std::string name = property.empty() ? doc.header_value("property") : property;
  if (name.empty()) throw PreconditionError("witness names no property (expected a '# property:' header line)");
  return find_property(name).check(doc);
}

}  // namespace finconv
