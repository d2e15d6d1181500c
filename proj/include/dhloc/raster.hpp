#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "conedist.hpp"

namespace dhloc {

enum class RasterFormat { Csv, Svg };

struct RasterSpec {
    Box window;
    std::vector<std::size_t> resolution;
    std::uint64_t seed = 0;
    RasterFormat format = RasterFormat::Csv;
    bool decimal = false;
};

struct RasterSample {
    Vec point;
    Rational value;
};

struct Raster {
    std::vector<std::size_t> resolution;
    Vec jitter;  // offset of every sample from its cell center
    std::vector<RasterSample> samples;  // cell index order, first axis fastest
};

namespace detail {

inline std::string number_text(const Rational& q, bool decimal) {
    if (!decimal) return to_string(q);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", to_double(q));
    return buf;
}

inline std::vector<Vec> cell_centers(const Box& w, const std::vector<std::size_t>& res, const Vec& jitter) {
    const std::size_t n = w.dim();
    std::size_t total = 1;
    for (auto r : res) total *= r;
    std::vector<Vec> pts;
    pts.reserve(total);
    for (std::size_t c = 0; c < total; ++c) {
        std::size_t code = c;
        Vec x(n);
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t i = code % res[j];
            code /= res[j];
            Rational h = (w.hi[j] - w.lo[j]) / static_cast<long>(res[j]);
            x[j] = w.lo[j] + h * (Rational(static_cast<long>(i)) + frac(1, 2)) + jitter[j];
        }
        pts.push_back(std::move(x));
    }
    return pts;
}

} // namespace detail

// Samples the density at jittered cell centers; the jitter is re-drawn until no sample is on a wall.
inline Raster rasterize(const ConeDistribution& d, const RasterSpec& spec, unsigned threads = 0) {
    const std::size_t n = d.dim();
    if (spec.window.dim() != n || spec.window.hi.size() != n || spec.resolution.size() != n)
        throw Error(Errc::InvalidWindow, "raster window and resolution must match the rank");
    for (auto r : spec.resolution)
        if (r == 0) throw Error(Errc::InvalidWindow, "raster resolution must be positive");
    if (spec.window.empty()) throw Error(Errc::InvalidWindow, "raster window is empty");
    if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));

    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<long> offset(-1000, 1000);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Vec jitter(n);
        for (std::size_t j = 0; j < n; ++j) {
            Rational h = (spec.window.hi[j] - spec.window.lo[j]) / static_cast<long>(spec.resolution[j]);
            jitter[j] = h * frac(offset(rng), 10007);
        }
        auto pts = detail::cell_centers(spec.window, spec.resolution, jitter);
        std::vector<Rational> values(pts.size());
        std::vector<char> on_wall(threads, 0);
        std::vector<std::exception_ptr> failure(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < pts.size() && !on_wall[t] && !failure[t]; i += threads) {
                    try {
                        values[i] = density_at(d, pts[i]);
                    } catch (const Error& e) {
                        if (e.code() == Errc::NonGenericPoint) on_wall[t] = 1;
                        else failure[t] = std::current_exception();
                    } catch (...) {
                        failure[t] = std::current_exception();
                    }
                }
            });
        for (auto& th : pool) th.join();
        for (const auto& f : failure)
            if (f) std::rethrow_exception(f);
        if (std::find(on_wall.begin(), on_wall.end(), 1) != on_wall.end()) continue;
        Raster r{spec.resolution, jitter, {}};
        for (std::size_t i = 0; i < pts.size(); ++i) r.samples.push_back({std::move(pts[i]), values[i]});
        return r;
    }
    throw Error(Errc::NonGenericPoint, "no generic jitter found for the raster grid");
}

inline std::string raster_csv(const Raster& r, bool decimal) {
    std::ostringstream os;
    const std::size_t n = r.resolution.size();
    static const char* names[] = {"x", "y", "z"};
    for (std::size_t j = 0; j < n; ++j) os << (j < 3 ? names[j] : "x" + std::to_string(j + 1)) << ",";
    os << "value\r\n";
    for (const auto& s : r.samples) {
        for (std::size_t j = 0; j < n; ++j) os << detail::number_text(s.point[j], decimal) << ",";
        os << detail::number_text(s.value, decimal) << "\r\n";
    }
    return os.str();
}

// Flat sign map: light gray +1 (any positive), black negative, white zero.
inline std::string raster_svg(const Raster& r, int cell_px = 6) {
    if (r.resolution.size() > 2) throw Error(Errc::DimensionMismatch, "SVG output needs rank <= 2");
    const std::size_t nx = r.resolution[0], ny = r.resolution.size() == 2 ? r.resolution[1] : 1;
    const std::size_t w = nx * static_cast<std::size_t>(cell_px), h = ny * static_cast<std::size_t>(cell_px);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
       << " " << h << "\" shape-rendering=\"crispEdges\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";
    for (std::size_t c = 0; c < r.samples.size(); ++c) {
        int s = sign(r.samples[c].value);
        if (s == 0) continue;
        std::size_t i = c % nx, j = c / nx;
        std::size_t y = (ny - 1 - j) * static_cast<std::size_t>(cell_px);
        os << "<rect x=\"" << i * static_cast<std::size_t>(cell_px) << "\" y=\"" << y << "\" width=\"" << cell_px
           << "\" height=\"" << cell_px << "\" fill=\"" << (s > 0 ? "#d3d3d3" : "#000000") << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace dhloc
