#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "riesz/interval.hpp"

namespace riesz {

/**
 * Axis-aligned box of named intervals; the subdivision unit of the certifier.
 */
struct Box {
    std::vector<Interval> axes;
    std::vector<std::string> names;  // may be empty; else one name per axis

    Box() = default;
    explicit Box(std::vector<Interval> a, std::vector<std::string> n = {})
        : axes(std::move(a)), names(std::move(n)) {
        if (axes.empty()) throw std::invalid_argument("box must have at least one axis");
        if (!names.empty() && names.size() != axes.size())
            throw std::invalid_argument("box axis/name count mismatch");
    }

    std::size_t dim() const { return axes.size(); }

    std::vector<double> midpoint() const {
        std::vector<double> m;
        m.reserve(axes.size());
        for (const auto& a : axes) m.push_back(a.mid());
        return m;
    }

    /// Maximum coordinate width.
    double width() const {
        double w = 0.0;
        for (const auto& a : axes) w = std::max(w, a.width());
        return w;
    }

    /// Widest axis, optionally with per-axis scale weights (width/scale compared).
    std::size_t widest_axis(const std::vector<double>& scales = {}) const {
        std::size_t best = 0;
        double best_w = -1.0;
        for (std::size_t i = 0; i < axes.size(); ++i) {
            double w = axes[i].width();
            if (!scales.empty() && scales[i] > 0.0) w /= scales[i];
            if (w > best_w) {
                best_w = w;
                best = i;
            }
        }
        return best;
    }

    /// Split along `axis` at its midpoint; the two children cover *this exactly.
    std::pair<Box, Box> bisect(std::size_t axis) const {
        Box a = *this, b = *this;
        double m = axes[axis].mid();
        a.axes[axis] = Interval(axes[axis].lo, m);
        b.axes[axis] = Interval(m, axes[axis].hi);
        return {std::move(a), std::move(b)};
    }

    std::pair<Box, Box> bisect_widest(const std::vector<double>& scales = {}) const {
        return bisect(widest_axis(scales));
    }
};

}  // namespace riesz
