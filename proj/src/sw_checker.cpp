#include "stabgraph/sw_checker.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace stabgraph {

ErrorConfiguration ErrorConfiguration::of(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1])
            throw IndexError("duplicate vertex in error configuration");
    return {std::move(v)};
}

std::string ErrorConfiguration::label(int) const {
    std::string s = "{";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(vertices[i] + 1);
    }
    return s + "}";
}

namespace {

void check_config(const CoincidenceMatrix& xi, const ErrorConfiguration& e) {
    for (int v : e.vertices)
        if (v < 0 || v >= xi.n())
            throw IndexError("error configuration vertex out of range");
}

}  // namespace

BitMatrix constraint_system(const CoincidenceMatrix& xi, const ErrorConfiguration& e) {
    check_config(xi, e);
    int k = xi.k();
    std::vector<std::size_t> rows;
    for (int y = 0; y < xi.n(); ++y)
        if (!std::binary_search(e.vertices.begin(), e.vertices.end(), y))
            rows.push_back(static_cast<std::size_t>(k + y));
    std::vector<std::size_t> cols;
    for (int x = 0; x < k; ++x)
        cols.push_back(static_cast<std::size_t>(x));
    for (int v : e.vertices)
        cols.push_back(static_cast<std::size_t>(k + v));
    return xi.xi().submatrix(rows, cols);
}

bool detect_strong(const CoincidenceMatrix& xi, const ErrorConfiguration& e) {
    return solve_homogeneous(constraint_system(xi, e));
}

bool detect_weak(const CoincidenceMatrix& xi, const ErrorConfiguration& e) {
    BitMatrix sys = constraint_system(xi, e);
    int k = xi.k();
    std::size_t ncols = sys.cols();
    // wc1 rows: d^X = 0 (unit rows on input columns) and Xi^X_E d^E = 0
    // (one row per input vertex, supported on the E columns).
    BitMatrix extra(2 * static_cast<std::size_t>(k), ncols);
    for (int i = 0; i < k; ++i)
        extra.set(i, i, true);
    for (int i = 0; i < k; ++i)
        for (std::size_t j = 0; j < e.vertices.size(); ++j)
            if (xi.xi().get(i, k + e.vertices[j]))
                extra.set(k + i, k + j, true);
    return solve_homogeneous(sys.vstack(extra));
}

namespace {

std::vector<ErrorConfiguration> enumerate_configs(int n, int max_size) {
    std::vector<ErrorConfiguration> out;
    out.push_back(ErrorConfiguration{{}});
    for (int size = 1; size <= std::min(max_size, n); ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i)
            idx[i] = i;
        while (true) {
            out.push_back(ErrorConfiguration{idx});
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace

DetectionReport verify_correction(const CoincidenceMatrix& xi, int e, Mode mode, int threads) {
    if (2 * e > xi.n())
        throw IndexError("2e exceeds the number of output vertices");
    DetectionReport rep;
    rep.mode = mode;
    rep.requested_e = e;
    auto configs = enumerate_configs(xi.n(), 2 * e);
    rep.per_config.resize(configs.size());

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            ConfigVerdict v;
            v.config = configs[i];
            v.strong = detect_strong(xi, configs[i]);
            v.weak = detect_weak(xi, configs[i]);
            rep.per_config[i] = std::move(v);
        }
    };
    int nthreads = std::max(1, threads);
    if (nthreads == 1 || configs.size() < 2) {
        work(0, configs.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (configs.size() + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            std::size_t b = t * chunk;
            std::size_t en = std::min(configs.size(), b + chunk);
            if (b >= en)
                break;
            pool.emplace_back(work, b, en);
        }
        for (auto& th : pool)
            th.join();
    }

    rep.all_detected = true;
    for (const auto& v : rep.per_config)
        rep.all_detected = rep.all_detected && v.detected(mode);
    rep.corrects_e = 0;
    for (int cand = 1; cand <= e; ++cand) {
        bool ok = true;
        for (const auto& v : rep.per_config)
            if (static_cast<int>(v.config.vertices.size()) <= 2 * cand && !v.detected(mode))
                ok = false;
        if (ok)
            rep.corrects_e = cand;
    }
    return rep;
}

std::string DetectionReport::table() const {
    std::ostringstream os;
    os << "mode: " << (mode == Mode::strong ? "strong" : "weak") << "  e: " << requested_e
       << "\n";
    os << "config        strong  weak\n";
    for (const auto& v : per_config) {
        std::string lbl = v.config.label(0);
        os << lbl << std::string(lbl.size() < 14 ? 14 - lbl.size() : 1, ' ')
           << (v.strong ? "yes" : "NO ") << "     " << (v.weak ? "yes" : "NO ") << "\n";
    }
    os << "detected (" << (mode == Mode::strong ? "strong" : "weak") << "): "
       << [this] {
              std::size_t c = 0;
              for (const auto& v : per_config)
                  if (v.detected(mode))
                      ++c;
              return c;
          }()
       << "/" << per_config.size() << "\n";
    os << "corrects e = " << corrects_e << "\n";
    return os.str();
}

}  // namespace stabgraph
