/*
 * Brute-force ground truth. The enumeration fixes the pencil of lines
 * through point 0 and extends by always completing the lexicographically
 * smallest uncovered pair with ascending further points, so every labeled
 * completion of the fixed pencil is generated exactly once. Canonical forms
 * come from a branch-and-bound over relabelings that orders each structure
 * by its sorted vector of line bitmasks.
 */
#include "classline/oracle.hpp"

#include "classline/data.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace classline {

namespace {

using Mask = uint32_t;

constexpr int kMaxPoints = 15;

// ---- canonical labeling ----

// Sorted line-bitmask encoding under an incremental relabeling. Masks over
// new labels; a line is complete once all its points carry new labels, and
// every line completed later contains a higher label, so completed masks
// form a true (sorted) prefix of the final encoding.
struct CanonSearch {
  int v = 0;
  std::vector<std::vector<int>> lines_of_point;
  std::vector<int> line_size;
  std::vector<int> assigned_count;
  std::vector<Mask> line_mask;
  std::vector<int> new_label;
  std::vector<Mask> prefix;
  std::vector<Mask> best;
  Nat aut_count = 0;

  explicit CanonSearch(const IncidenceStructure& s) {
    v = s.v;
    lines_of_point.assign(v, {});
    for (size_t li = 0; li < s.lines.size(); ++li) {
      line_size.push_back(static_cast<int>(s.lines[li].size()));
      for (int p : s.lines[li]) lines_of_point[p].push_back(static_cast<int>(li));
    }
    assigned_count.assign(s.lines.size(), 0);
    line_mask.assign(s.lines.size(), 0);
    new_label.assign(v, -1);
    // Identity encoding as the initial bound: every leaf comparison is
    // against a real encoding, so pruning is active from the first node.
    for (const auto& line : s.lines) {
      Mask m = 0;
      for (int p : line) m |= Mask(1) << p;
      best.push_back(m);
    }
    std::sort(best.begin(), best.end());
  }

  int push(int point, int label) {
    new_label[point] = label;
    int appended = 0;
    const size_t base = prefix.size();
    for (int li : lines_of_point[point]) {
      line_mask[li] |= Mask(1) << label;
      if (++assigned_count[li] == line_size[li]) {
        prefix.push_back(line_mask[li]);
        ++appended;
      }
    }
    // Each batch shares the new top bit, so sorting the batch keeps the
    // whole prefix sorted.
    std::sort(prefix.begin() + base, prefix.end());
    return appended;
  }

  void pop(int point, int label, int appended) {
    prefix.resize(prefix.size() - appended);
    for (int li : lines_of_point[point]) {
      --assigned_count[li];
      line_mask[li] &= ~(Mask(1) << label);
    }
    new_label[point] = -1;
  }

  // -1: strictly below the bound (keep going, no pruning applies);
  //  0: equal so far and still completable to the bound;
  // +1: provably above the bound (prune).
  int compare(int labels_assigned) const {
    for (size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] < best[i]) return -1;
      if (prefix[i] > best[i]) return 1;
    }
    // Every future mask contains a label >= labels_assigned; if the bound's
    // next mask sits below that, equality is impossible.
    if (prefix.size() < best.size() &&
        best[prefix.size()] < (Mask(1) << labels_assigned))
      return 1;
    return 0;
  }

  void search_min(int label) {
    if (label == v) {
      if (prefix < best) best = prefix;
      return;
    }
    for (int point = 0; point < v; ++point) {
      if (new_label[point] >= 0) continue;
      const int appended = push(point, label);
      if (compare(label + 1) <= 0) search_min(label + 1);
      pop(point, label, appended);
    }
  }

  void count_aut(int label) {
    if (label == v) {
      if (prefix == best) ++aut_count;
      return;
    }
    for (int point = 0; point < v; ++point) {
      if (new_label[point] >= 0) continue;
      const int appended = push(point, label);
      if (compare(label + 1) == 0) count_aut(label + 1);
      pop(point, label, appended);
    }
  }
};

// ---- pencil completion search ----

struct ClassBucket {
  Nat aut_order;
  IncidenceStructure rep;
};

struct PencilSearch {
  int v = 0, k = 0;
  __uint128_t covered = 0;
  std::vector<std::vector<int>> lines;
  Nat completions = 0;
  std::map<std::string, ClassBucket> classes;

  int pair_index(int a, int b) const { return a * (2 * v - a - 1) / 2 + (b - a - 1); }
  bool is_covered(int a, int b) const { return (covered >> pair_index(a, b)) & 1; }

  void add_line(const std::vector<int>& line) {
    for (size_t i = 0; i < line.size(); ++i)
      for (size_t j = i + 1; j < line.size(); ++j)
        covered |= __uint128_t(1) << pair_index(line[i], line[j]);
    lines.push_back(line);
  }

  void remove_line(const std::vector<int>& line) {
    for (size_t i = 0; i < line.size(); ++i)
      for (size_t j = i + 1; j < line.size(); ++j)
        covered &= ~(__uint128_t(1) << pair_index(line[i], line[j]));
    lines.pop_back();
  }

  // Smallest uncovered pair at or after the given triangular index, or -1.
  int first_uncovered(int from) const {
    const int total = v * (v - 1) / 2;
    for (int idx = from; idx < total; ++idx)
      if (!((covered >> idx) & 1)) return idx;
    return -1;
  }

  std::pair<int, int> pair_of(int idx) const {
    int a = 0;
    int row = v - 1;
    while (idx >= row) {
      idx -= row;
      --row;
      ++a;
    }
    return {a, a + 1 + idx};
  }

  void record_completion() {
    ++completions;
    IncidenceStructure s;
    s.v = v;
    s.lines = lines;
    s.normalize();
    CanonicalResult canon = canonical_form(s);
    const std::string key = to_text(canon.form);
    classes.try_emplace(key, ClassBucket{canon.aut_order, canon.form});
  }

  void extend_line(std::vector<int>& line, int from_idx) {
    if (static_cast<int>(line.size()) == k) {
      add_line(line);
      search(from_idx);
      remove_line(line);
      return;
    }
    const int needed = k - static_cast<int>(line.size());
    for (int x = line.back() + 1; x + needed - 1 < v; ++x) {
      bool fresh = true;
      for (int y : line) {
        if (is_covered(y, x)) {
          fresh = false;
          break;
        }
      }
      if (!fresh) continue;
      line.push_back(x);
      extend_line(line, from_idx);
      line.pop_back();
    }
  }

  void search(int from_idx) {
    const int idx = first_uncovered(from_idx);
    if (idx < 0) {
      record_completion();
      return;
    }
    auto [p1, p2] = pair_of(idx);
    // The smallest uncovered pair must lie on the next line, and any further
    // point below p2 would create a smaller uncovered pair on that line, so
    // the remaining points ascend from p2.
    std::vector<int> line = {p1, p2};
    extend_line(line, idx);
  }
};

// ---- small finite fields ----

struct FieldOps {
  long long q = 0;
  long long p = 0;
  const SmallField* table = nullptr;

  static FieldOps make(long long q) {
    FieldOps f;
    f.q = q;
    const auto factors = prime_factorize(Nat(q));
    if (factors.size() != 1) throw std::domain_error("field order must be a prime power");
    f.p = static_cast<long long>(factors[0].prime);
    if (factors[0].exponent > 1) {
      f.table = small_field(q);
      if (!f.table || f.p != 2)
        throw std::domain_error("no arithmetic table for GF(" + std::to_string(q) + ")");
    }
    return f;
  }

  int add(int x, int y) const {
    return table ? (x ^ y) : static_cast<int>((x + y) % q);
  }
  int sub(int x, int y) const {
    return table ? (x ^ y) : static_cast<int>(((x - y) % q + q) % q);
  }
  int neg(int x) const { return sub(0, x); }
  int mul(int x, int y) const {
    if (table) {
      if (x == 0 || y == 0) return 0;
      return table->antilog_table[(table->log_table[x] + table->log_table[y]) % (q - 1)];
    }
    return static_cast<int>((static_cast<long long>(x) * y) % q);
  }
  int inv(int x) const {
    if (x == 0) throw std::domain_error("zero has no inverse");
    if (table)
      return table->antilog_table[(q - 1 - table->log_table[x]) % (q - 1)];
    int r = 1;
    for (long long e = q - 2; e > 0; --e) r = mul(r, x);
    return r;
  }
  int pow(int x, long long e) const {
    int r = 1;
    for (long long i = 0; i < e; ++i) r = mul(r, x);
    return r;
  }
};

// Scale so the first nonzero coordinate is 1.
std::vector<int> normalize_point(const FieldOps& f, std::vector<int> vec) {
  for (int c : vec) {
    if (c != 0) {
      const int scale = f.inv(c);
      for (int& x : vec) x = f.mul(x, scale);
      return vec;
    }
  }
  throw std::logic_error("cannot normalize the zero vector");
}

bool next_vector(std::vector<int>& vec, long long q) {
  for (size_t i = 0; i < vec.size(); ++i) {
    if (++vec[i] < q) return true;
    vec[i] = 0;
  }
  return false;
}

// Rank of a matrix given as row vectors, by elimination over the field.
int field_rank(const FieldOps& f, std::vector<std::vector<int>> rows) {
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const int scale = f.inv(rows[rank][col]);
    for (size_t j = col; j < cols; ++j) rows[rank][j] = f.mul(rows[rank][j], scale);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const int factor = rows[i][col];
      for (size_t j = col; j < cols; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[rank][j]));
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

// Standard alternating form on pairs (e_0,e_1), (e_2,e_3), ...
int symplectic_form(const FieldOps& f, const std::vector<int>& x, const std::vector<int>& y) {
  int value = 0;
  for (size_t i = 0; i + 1 < x.size(); i += 2) {
    value = f.add(value, f.mul(x[i], y[i + 1]));
    value = f.sub(value, f.mul(x[i + 1], y[i]));
  }
  return value;
}

void check_matrix_budget(int n, long long q) {
  double cells = 1;
  for (int i = 0; i < n * n; ++i) {
    cells *= static_cast<double>(q);
    if (cells > (1 << 24))
      throw std::domain_error("matrix brute force limited to q^(n^2) <= 2^24");
  }
}

}  // namespace

void IncidenceStructure::normalize() {
  for (auto& line : lines) std::sort(line.begin(), line.end());
  std::sort(lines.begin(), lines.end());
}

bool IncidenceStructure::operator==(const IncidenceStructure& other) const {
  return v == other.v && lines == other.lines;
}

std::string to_text(const IncidenceStructure& s) {
  std::ostringstream out;
  out << "v " << s.v << "\n";
  out << "lines " << s.lines.size() << "\n";
  for (const auto& line : s.lines) {
    for (size_t i = 0; i < line.size(); ++i) out << (i ? " " : "") << line[i];
    out << "\n";
  }
  return out.str();
}

IncidenceStructure from_text(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  IncidenceStructure s;
  size_t b = 0;
  if (!(in >> tag) || tag != "v" || !(in >> s.v))
    throw std::runtime_error("incidence text must start with 'v <count>'");
  if (!(in >> tag) || tag != "lines" || !(in >> b))
    throw std::runtime_error("incidence text needs 'lines <count>' after the point count");
  std::string rest;
  std::getline(in, rest);
  for (size_t i = 0; i < b; ++i) {
    std::string row;
    if (!std::getline(in, row)) throw std::runtime_error("fewer line rows than declared");
    std::istringstream cells(row);
    std::vector<int> line;
    int point;
    while (cells >> point) {
      if (point < 0 || point >= s.v) throw std::runtime_error("point index out of range");
      line.push_back(point);
    }
    if (line.empty()) throw std::runtime_error("empty line row");
    s.lines.push_back(std::move(line));
  }
  return s;
}

VerifyResult verify_regular(const IncidenceStructure& input) {
  IncidenceStructure s = input;
  s.normalize();
  VerifyResult out;
  const int v = s.v;
  if (v < 4) {
    out.reason = "too few points for a nontrivial space";
    return out;
  }
  if (s.lines.size() < 2) {
    out.reason = "fewer than two lines";
    return out;
  }
  const size_t k = s.lines[0].size();
  if (k < 3) {
    out.reason = "line size below 3";
    return out;
  }
  if (static_cast<int>(k) >= v) {
    out.reason = "line size not below the point count";
    return out;
  }
  std::vector<int> degree(v, 0);
  std::vector<char> pair_seen(static_cast<size_t>(v) * v, 0);
  for (const auto& line : s.lines) {
    if (line.size() != k) {
      out.reason = "line sizes are not constant";
      return out;
    }
    for (size_t i = 0; i < line.size(); ++i) {
      const int a = line[i];
      if (a < 0 || a >= v) {
        out.reason = "point index out of range";
        return out;
      }
      if (i > 0 && line[i - 1] == a) {
        out.reason = "repeated point on a line";
        return out;
      }
      ++degree[a];
      for (size_t j = i + 1; j < line.size(); ++j) {
        char& seen = pair_seen[static_cast<size_t>(a) * v + line[j]];
        if (seen) {
          out.reason = "a point pair lies on two lines";
          return out;
        }
        seen = 1;
      }
    }
  }
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      if (!pair_seen[static_cast<size_t>(a) * v + b]) {
        out.reason = "a point pair lies on no line";
        return out;
      }
  for (int a = 1; a < v; ++a)
    if (degree[a] != degree[0]) {
      out.reason = "point degrees are not constant";
      return out;
    }
  out.ok = true;
  out.params = {Nat(v), Nat(s.lines.size()), Nat(degree[0]), Nat(k)};
  return out;
}

CanonicalResult canonical_form(const IncidenceStructure& input) {
  IncidenceStructure s = input;
  s.normalize();
  if (s.v < 1 || s.v > kMaxPoints)
    throw std::domain_error("canonical labeling supports 1 <= v <= 15 points");
  for (const auto& line : s.lines)
    for (int p : line)
      if (p < 0 || p >= s.v) throw std::domain_error("point index out of range");
  CanonSearch search(s);
  search.search_min(0);
  const std::vector<Mask> encoding = search.best;
  search.count_aut(0);

  CanonicalResult out;
  out.form.v = s.v;
  for (Mask m : encoding) {
    std::vector<int> line;
    for (int p = 0; p < s.v; ++p)
      if ((m >> p) & 1) line.push_back(p);
    out.form.lines.push_back(std::move(line));
  }
  out.form.normalize();
  out.aut_order = search.aut_count;
  return out;
}

Nat factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Nat r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

EnumResult enumerate_regular(long long v, long long k, int threads) {
  if (k < 3 || v <= k || v > kMaxPoints)
    throw std::domain_error("enumeration needs 3 <= k < v <= 15");
  EnumResult out;
  out.v = v;
  out.k = k;
  const Feasibility feas = derive_params(Nat(v), Nat(k));
  if (!feas.feasible) return out;
  const long long r = static_cast<long long>(feas.params.r);

  // Pencil through point 0: consecutive blocks of k-1 points.
  PencilSearch base;
  base.v = static_cast<int>(v);
  base.k = static_cast<int>(k);
  for (long long i = 0; i < r; ++i) {
    std::vector<int> line = {0};
    for (long long j = 0; j < k - 1; ++j)
      line.push_back(static_cast<int>(1 + i * (k - 1) + j));
    base.add_line(line);
  }
  out.pencils = factorial(v - 1);
  for (long long i = 0; i < r; ++i) out.pencils /= factorial(k - 1);
  out.pencils /= factorial(r);

  // Candidate lines through the first uncovered pair; one task per candidate.
  const int root_idx = base.first_uncovered(0);
  if (root_idx < 0) throw std::logic_error("pencil already covers all pairs");
  auto [p1, p2] = base.pair_of(root_idx);
  std::vector<std::vector<int>> first_lines;
  std::vector<int> line = {p1, p2};
  const std::function<void(int)> collect = [&](int last) {
    if (static_cast<int>(line.size()) == k) {
      first_lines.push_back(line);
      return;
    }
    const int needed = k - static_cast<int>(line.size());
    for (int x = last + 1; x + needed - 1 < base.v; ++x) {
      bool fresh = true;
      for (int y : line)
        if (base.is_covered(y, x)) {
          fresh = false;
          break;
        }
      if (!fresh) continue;
      line.push_back(x);
      collect(x);
      line.pop_back();
    }
  };
  collect(p2);

  const auto run_task = [&base, root_idx](const std::vector<int>& first) {
    PencilSearch task = base;
    task.add_line(first);
    task.search(root_idx);
    return task;
  };

  std::vector<PencilSearch> results;
  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  const bool parallel = (threads == 0 ? hardware > 1 : threads > 1) && first_lines.size() > 1;
  if (parallel) {
    std::vector<std::future<PencilSearch>> futures;
    for (const auto& first : first_lines)
      futures.push_back(std::async(std::launch::async, run_task, first));
    for (auto& f : futures) results.push_back(f.get());
  } else {
    for (const auto& first : first_lines) results.push_back(run_task(first));
  }

  std::map<std::string, ClassBucket> merged;
  for (auto& task : results) {
    out.completions += task.completions;
    for (auto& [key, bucket] : task.classes) merged.try_emplace(key, std::move(bucket));
  }
  const Nat vfact = factorial(v);
  for (auto& [key, bucket] : merged) {
    EnumClass cls;
    cls.rep = std::move(bucket.rep);
    cls.aut_order = bucket.aut_order;
    if (vfact % cls.aut_order != 0)
      throw std::logic_error("automorphism order does not divide v!");
    cls.labeled = vfact / cls.aut_order;
    out.labeled_total += cls.labeled;
    out.classes.push_back(std::move(cls));
  }
  // Orbit counting ties the two independent counts together; a mismatch
  // means the search or the canonical labeling is wrong.
  if (out.completions * out.pencils != out.labeled_total)
    throw std::logic_error("completion count does not match labeled-class total");
  return out;
}

IncidenceStructure build_pg(long long n, long long q) {
  if (n < 3) throw std::domain_error("projective space needs n >= 3");
  const FieldOps f = FieldOps::make(q);
  double size = 1;
  for (long long i = 0; i < n; ++i) {
    size *= static_cast<double>(q);
    if (size > (1 << 20)) throw std::domain_error("projective space too large to build");
  }

  std::map<std::vector<int>, int> index_of;
  std::vector<std::vector<int>> points;
  std::vector<int> vec(static_cast<size_t>(n), 0);
  while (next_vector(vec, q)) {
    const std::vector<int> norm = normalize_point(f, vec);
    if (norm == vec) {
      index_of.emplace(vec, static_cast<int>(points.size()));
      points.push_back(vec);
    }
  }

  std::set<std::vector<int>> line_set;
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      std::vector<int> pline = {static_cast<int>(i)};
      for (int mu = 0; mu < q; ++mu) {
        std::vector<int> combo(static_cast<size_t>(n));
        for (size_t t = 0; t < combo.size(); ++t)
          combo[t] = f.add(points[j][t], f.mul(mu, points[i][t]));
        pline.push_back(index_of.at(normalize_point(f, combo)));
      }
      std::sort(pline.begin(), pline.end());
      line_set.insert(std::move(pline));
    }
  }

  IncidenceStructure s;
  s.v = static_cast<int>(points.size());
  s.lines.assign(line_set.begin(), line_set.end());
  s.normalize();
  return s;
}

Nat brute_gl_order(int n, long long q) {
  check_matrix_budget(n, q);
  const FieldOps f = FieldOps::make(q);
  std::vector<int> cells(static_cast<size_t>(n) * n, 0);
  Nat count = 0;
  do {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = cells[static_cast<size_t>(i) * n + j];
    if (field_rank(f, rows) == n) ++count;
  } while (next_vector(cells, q));
  return count;
}

Nat brute_sp_order(int n, long long q) {
  if (n % 2 != 0) throw std::domain_error("symplectic dimension must be even");
  check_matrix_budget(n, q);
  const FieldOps f = FieldOps::make(q);
  std::vector<std::vector<int>> basis(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) basis[i][i] = 1;
  std::vector<int> cells(static_cast<size_t>(n) * n, 0);
  Nat count = 0;
  do {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = cells[static_cast<size_t>(i) * n + j];
    // Columns are the images of the basis vectors; preserving the form on
    // all basis pairs is preserving it everywhere.
    bool preserves = true;
    for (int i = 0; i < n && preserves; ++i) {
      std::vector<int> mi(n);
      for (int t = 0; t < n; ++t) mi[t] = rows[t][i];
      for (int j = i + 1; j < n && preserves; ++j) {
        std::vector<int> mj(n);
        for (int t = 0; t < n; ++t) mj[t] = rows[t][j];
        if (symplectic_form(f, mi, mj) != symplectic_form(f, basis[i], basis[j]))
          preserves = false;
      }
    }
    if (preserves && field_rank(f, rows) == n) ++count;
  } while (next_vector(cells, q));
  return count;
}

long long brute_nondeg_count_sp(int n, int m, long long q) {
  if (n % 2 != 0 || m % 2 != 0 || m < 2 || m >= n)
    throw std::domain_error("need even 2 <= m < n for symplectic parts");
  const FieldOps f = FieldOps::make(q);
  long long total_vectors = 1;
  for (int i = 0; i < n; ++i) {
    total_vectors *= q;
    if (total_vectors > (1 << 20)) throw std::domain_error("space too large for brute force");
  }
  std::vector<std::vector<int>> all;
  std::vector<int> vec(static_cast<size_t>(n), 0);
  all.push_back(vec);
  while (next_vector(vec, q)) all.push_back(vec);

  long long ordered = 0;
  std::vector<int> chosen;
  const std::function<void(std::vector<std::vector<int>>&)> recurse =
      [&](std::vector<std::vector<int>>& tuple) {
        if (static_cast<int>(tuple.size()) == m) {
          std::vector<std::vector<int>> gram(m, std::vector<int>(m));
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) gram[i][j] = symplectic_form(f, tuple[i], tuple[j]);
          if (field_rank(f, gram) == m) ++ordered;
          return;
        }
        for (long long idx = 1; idx < total_vectors; ++idx) {
          tuple.push_back(all[static_cast<size_t>(idx)]);
          if (field_rank(f, tuple) == static_cast<int>(tuple.size())) recurse(tuple);
          tuple.pop_back();
        }
      };
  std::vector<std::vector<int>> tuple;
  recurse(tuple);

  long long bases = 1;
  long long qm = 1;
  for (int i = 0; i < m; ++i) qm *= q;
  long long qi = 1;
  for (int i = 0; i < m; ++i) {
    bases *= qm - qi;
    qi *= q;
  }
  if (ordered % bases != 0) throw std::logic_error("ordered tuple count not divisible by basis count");
  return ordered / bases;
}

long long brute_nonisotropic_points_gu(int n, long long q) {
  const long long qq = q * q;
  const FieldOps f = FieldOps::make(qq);
  double size = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<double>(qq);
    if (size > (1 << 20)) throw std::domain_error("space too large for brute force");
  }
  long long count = 0;
  std::vector<int> vec(static_cast<size_t>(n), 0);
  while (next_vector(vec, qq)) {
    const std::vector<int> norm = normalize_point(f, vec);
    if (norm != vec) continue;
    int h = 0;
    for (int c : vec) h = f.add(h, f.mul(c, f.pow(c, q)));
    if (h != 0) ++count;
  }
  return count;
}

long long brute_orth_in_symp_count(int n, long long q, int sign) {
  if (q % 2 != 0) throw std::domain_error("quadratic-form count needs even q");
  if (n % 2 != 0 || n < 2) throw std::domain_error("dimension must be even and >= 2");
  if (sign != 1 && sign != -1) throw std::domain_error("sign must be +1 or -1");
  const FieldOps f = FieldOps::make(q);
  long long space = 1;
  for (int i = 0; i < n; ++i) {
    space *= q;
    if (space > (1 << 12)) throw std::domain_error("space too large for brute force");
  }
  // Target zero count for a form of the requested type:
  // q^(n-1) + sign * (q-1) * q^(n/2-1).
  long long half = 1;
  for (int i = 0; i < n / 2 - 1; ++i) half *= q;
  long long qn1 = 1;
  for (int i = 0; i < n - 1; ++i) qn1 *= q;
  const long long target = qn1 + sign * (q - 1) * half;

  long long count = 0;
  std::vector<int> values(static_cast<size_t>(n), 0);  // Q(e_i)
  std::vector<int> x(static_cast<size_t>(n), 0);
  do {
    long long zeros = 0;
    std::fill(x.begin(), x.end(), 0);
    // Q(sum x_i e_i) = sum x_i^2 Q(e_i) + sum_{i<j} x_i x_j B(e_i, e_j);
    // every such Q polarizes to the standard alternating form.
    bool first = true;
    while (first || next_vector(x, q)) {
      first = false;
      int val = 0;
      for (int i = 0; i < n; ++i) val = f.add(val, f.mul(f.mul(x[i], x[i]), values[i]));
      // B(e_i, e_j) = 1 exactly on the coupled pairs (e_{2t}, e_{2t+1}).
      for (int i = 0; i + 1 < n; i += 2)
        val = f.add(val, f.mul(x[i], x[i + 1]));
      if (val == 0) ++zeros;
    }
    if (zeros == target) ++count;
  } while (next_vector(values, q));
  return count;
}

}  // namespace classline
