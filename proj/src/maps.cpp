#include "qkd/maps.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace qkd {

char cellClassLabel(CellClass c) {
    switch (c) {
        case CellClass::A: return 'A';
        case CellClass::B: return 'B';
        case CellClass::C: return 'C';
        default: return 'I';
    }
}

std::optional<IsotropicSpectrum> solveIsotropic(int d, double D, double delta) {
    double y = (D - (d - 1.0) * delta) / (d * (d - 1.0));
    double x = delta + y;
    double u = 1.0 - 2.0 * (d - 1.0) * x - (d - 1.0) * (d - 1.0) * y;
    if (u < -1e-12 || x < -1e-12 || y < -1e-12) return std::nullopt;
    return IsotropicSpectrum{std::max(u, 0.0), std::max(x, 0.0), std::max(y, 0.0)};
}

BellSpectrum isotropicBellSpectrum(const FieldSpec& spec,
                                   const IsotropicSpectrum& iso) {
    const int d = spec.d();
    std::vector<double> lambda(d * d, iso.y);
    for (int k = 1; k < d; ++k) {
        lambda[k] = iso.x;          // row 0
        lambda[k * d] = iso.x;      // column 0
    }
    lambda[0] = iso.u;
    return {spec, std::move(lambda)};
}

MapCell classify(const FieldSpec& spec, double D, double delta) {
    MapCell cell{D, delta, {0.0, 0.0, 0.0}, CellClass::Infeasible};
    auto iso = solveIsotropic(spec.d(), D, delta);
    if (!iso) return cell;
    cell.iso = *iso;
    Verdict v = evaluate(isotropicBellSpectrum(spec, *iso));
    switch (v.classification) {
        case Classification::DistillableNppt: cell.cls = CellClass::A; break;
        case Classification::Ppt: cell.cls = CellClass::B; break;
        default: cell.cls = CellClass::C; break;
    }
    return cell;
}

GridSpec defaultGrid(int d, int resolution) {
    double range;
    switch (d) {
        case 2: range = 0.4; break;
        case 3: range = 0.35; break;
        case 4: range = 0.3; break;
        default: range = 0.25; break;
    }
    return {d, 0.0, 1.0, -range, range, resolution, resolution};
}

double MapGrid::dValue(int col) const {
    return spec.dMin + (spec.dMax - spec.dMin) * col / (spec.nD - 1);
}

double MapGrid::deltaValue(int row) const {
    return spec.deltaMax - (spec.deltaMax - spec.deltaMin) * row / (spec.nDelta - 1);
}

MapGrid sweep(const GridSpec& grid, int threads) {
    if (grid.nD < 2 || grid.nDelta < 2)
        throw std::invalid_argument("sweep: resolution must be >= 2 per axis");
    const FieldSpec& spec = FieldSpec::of(grid.d);
    MapGrid out{grid, {}};
    out.cells.resize(static_cast<size_t>(grid.nD) * grid.nDelta);

    if (threads <= 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, grid.nDelta);

    auto worker = [&](int firstRow, int lastRow) {
        for (int row = firstRow; row < lastRow; ++row) {
            double delta = out.deltaValue(row);
            for (int col = 0; col < grid.nD; ++col)
                out.cells[row * grid.nD + col] =
                    classify(spec, out.dValue(col), delta);
        }
    };

    std::vector<std::thread> pool;
    int rowsPer = (grid.nDelta + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        int first = t * rowsPer;
        int last = std::min(grid.nDelta, first + rowsPer);
        if (first >= last) break;
        pool.emplace_back(worker, first, last);
    }
    for (auto& th : pool) th.join();
    return out;
}

double empiricalThreshold(const MapGrid& grid) {
    double dth = thresholdDisturbance(grid.spec.d);
    if (grid.spec.dMin >= dth || grid.spec.dMax <= dth)
        throw std::invalid_argument("empiricalThreshold: grid does not bracket D_th");
    for (int col = 0; col < grid.spec.nD; ++col)
        for (int row = 0; row < grid.spec.nDelta; ++row) {
            const MapCell& cell = grid.at(row, col);
            if (cell.cls == CellClass::B || cell.cls == CellClass::C)
                return cell.D;
        }
    throw std::invalid_argument("empiricalThreshold: no non-A feasible cell found");
}

void writeCsv(const MapGrid& grid, std::ostream& out) {
    out << "d,D,delta,u,x,y,class\n";
    char buf[160];
    for (const MapCell& c : grid.cells) {
        const char* cls = "INFEASIBLE";
        switch (c.cls) {
            case CellClass::A: cls = "A"; break;
            case CellClass::B: cls = "B"; break;
            case CellClass::C: cls = "C"; break;
            default: break;
        }
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%s\n",
                      grid.spec.d, c.D, c.delta, c.iso.u, c.iso.x, c.iso.y, cls);
        out << buf;
    }
}

void writePgm(const MapGrid& grid, std::ostream& out) {
    out << "P2\n" << grid.spec.nD << " " << grid.spec.nDelta << "\n255\n";
    for (int row = 0; row < grid.spec.nDelta; ++row) {
        for (int col = 0; col < grid.spec.nD; ++col) {
            int level = 255;
            switch (grid.at(row, col).cls) {
                case CellClass::A: level = 0; break;
                case CellClass::C: level = 85; break;
                case CellClass::B: level = 170; break;
                default: level = 255; break;
            }
            out << level << (col + 1 == grid.spec.nD ? "\n" : " ");
        }
    }
}

}  // namespace qkd
