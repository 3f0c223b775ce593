#include "pierce/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pierce {

using Json = nlohmann::ordered_json;

namespace {

// Raw coordinate as read, before deciding whether to rank-normalize.
struct Coord {
  std::int64_t integer = 0;
  double real = 0;
};

class AxisReader {
 public:
  // Returns the index of the coordinate slot.
  std::size_t read(const Json& j) {
    if (!j.is_number()) throw FormatError("coordinate is not a number: " + j.dump());
    Coord c;
    if (j.is_number_float()) {
      decimal_ = true;
      c.real = j.get<double>();
    } else if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      throw FormatError("coordinate out of range: " + j.dump());
    } else {
      c.integer = j.get<std::int64_t>();
      c.real = static_cast<double>(c.integer);
    }
    coords_.push_back(c);
    return coords_.size() - 1;
  }

  void read_interval(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) {
      throw FormatError(std::string(what) + " must be a two-element array");
    }
    const std::size_t lo = read(j[0]);
    const std::size_t hi = read(j[1]);
    slots_.push_back({lo, hi});
  }

  bool decimal() const { return decimal_; }

  // Final rank of every interval read, in reading order.
  std::vector<Interval> resolve(bool normalize) const {
    std::vector<Rank> values(coords_.size());
    if (normalize) {
      std::vector<double> reals;
      for (const Coord& c : coords_) reals.push_back(c.real);
      values = normalize_ranks(reals).ranks;
    } else {
      for (std::size_t i = 0; i < coords_.size(); ++i) values[i] = coords_[i].integer;
    }
    std::vector<Interval> out;
    for (auto [lo, hi] : slots_) out.push_back({values[lo], values[hi]});
    return out;
  }

 private:
  bool decimal_ = false;
  std::vector<Coord> coords_;
  std::vector<std::pair<std::size_t, std::size_t>> slots_;
};

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

Json pair(Rank a, Rank b) { return Json::array({a, b}); }

}  // namespace

Instance parse_instance(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("instance must be a JSON object");
  const Json& problem = field(j, "problem");
  if (!problem.is_string()) throw FormatError("\"problem\" must be a string");

  if (problem == "coverage") {
    AxisReader axis;
    axis.read_interval(field(j, "domain"), "domain");
    const Json& list = field(j, "intervals");
    if (!list.is_array()) throw FormatError("\"intervals\" must be an array");
    for (const Json& iv : list) axis.read_interval(iv, "interval");
    std::vector<Interval> ivs = axis.resolve(axis.decimal());
    CoverageInstance inst;
    inst.domain = ivs.front();
    inst.intervals.assign(ivs.begin() + 1, ivs.end());
    return inst;
  }

  if (problem == "piercing") {
    AxisReader xs, ys;
    xs.read_interval(field(j, "xdomain"), "xdomain");
    ys.read_interval(field(j, "ydomain"), "ydomain");
    const Json& list = field(j, "crosses");
    if (!list.is_array()) throw FormatError("\"crosses\" must be an array");
    for (const Json& c : list) {
      if (!c.is_object()) throw FormatError("cross must be an object");
      xs.read_interval(field(c, "h"), "h");
      ys.read_interval(field(c, "v"), "v");
    }
    const bool normalize = xs.decimal() || ys.decimal();
    const std::vector<Interval> hs = xs.resolve(normalize);
    const std::vector<Interval> vs = ys.resolve(normalize);
    PiercingInstance inst;
    inst.xdomain = hs.front();
    inst.ydomain = vs.front();
    for (std::size_t i = 1; i < hs.size(); ++i) inst.crosses.push_back({hs[i], vs[i]});
    return inst;
  }
  throw FormatError("unknown problem \"" + problem.get<std::string>() + "\"");
}

std::string to_json(const Instance& instance) {
  Json j;
  if (const auto* cov = std::get_if<CoverageInstance>(&instance)) {
    j["problem"] = "coverage";
    j["domain"] = pair(cov->domain.lo, cov->domain.hi);
    j["intervals"] = Json::array();
    for (const Interval& iv : cov->intervals) j["intervals"].push_back(pair(iv.lo, iv.hi));
  } else {
    const auto& p = std::get<PiercingInstance>(instance);
    j["problem"] = "piercing";
    j["xdomain"] = pair(p.xdomain.lo, p.xdomain.hi);
    j["ydomain"] = pair(p.ydomain.lo, p.ydomain.hi);
    j["crosses"] = Json::array();
    for (const Cross& c : p.crosses) {
      Json cj;
      cj["h"] = pair(c.h.lo, c.h.hi);
      cj["v"] = pair(c.v.lo, c.v.hi);
      j["crosses"].push_back(std::move(cj));
    }
  }
  return j.dump();
}

std::string to_json(const CoverageVerdict& verdict) {
  Json j;
  j["covered"] = verdict.covered;
  if (verdict.gap) j["gap"] = pair(verdict.gap->lo, verdict.gap->hi);
  j["queries"] = verdict.queries_used;
  return j.dump();
}

std::string to_json(const PiercingVerdict& verdict) {
  Json j;
  j["pierceable"] = verdict.pierceable;
  if (verdict.witness) j["witness"] = pair(verdict.witness->x, verdict.witness->y);
  j["queries"] = verdict.queries_used;
  return j.dump();
}

std::string to_json(const MinimalityReport& report) {
  Json j;
  j["full_family_pierceable"] = report.full_family_pierceable;
  j["each_deletion_pierceable"] = Json::array();
  for (bool b : report.each_deletion_pierceable) j["each_deletion_pierceable"].push_back(b);
  return j.dump();
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return parse_instance(ss.str());
}

void save_instance(const std::filesystem::path& path, const Instance& instance) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << to_json(instance) << '\n';
  out.flush();
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace pierce
