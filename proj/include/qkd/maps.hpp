#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "qkd/bell.hpp"
#include "qkd/criteria.hpp"

namespace qkd {

/// Isotropic Bell spectrum: lambda_00 = u, x on the rest of row 0 and
/// column 0, y elsewhere; u + 2(d-1)x + (d-1)^2 y = 1.
struct IsotropicSpectrum {
    double u, x, y;
};

enum class CellClass { A, B, C, Infeasible };

char cellClassLabel(CellClass c);  // 'A', 'B', 'C', 'I'

/// Solve (D, delta = x - y) for (u, x, y); nullopt when any component is
/// negative beyond 1e-12 (small negatives are clamped to 0).
std::optional<IsotropicSpectrum> solveIsotropic(int d, double D, double delta);

BellSpectrum isotropicBellSpectrum(const FieldSpec& spec,
                                   const IsotropicSpectrum& iso);

struct MapCell {
    double D;
    double delta;
    IsotropicSpectrum iso;  // zeros when infeasible
    CellClass cls;
};

struct GridSpec {
    int d;
    double dMin, dMax;
    double deltaMin, deltaMax;
    int nD, nDelta;  // both >= 2
};

/// Default grid per dimension: D in [0,1], delta range covering the feasible
/// wedge with margin.
GridSpec defaultGrid(int d, int resolution = 512);

/// Cells in row-major order: rows are delta values in descending order,
/// columns are D values in ascending order (the PGM pixel layout).
struct MapGrid {
    GridSpec spec;
    std::vector<MapCell> cells;

    const MapCell& at(int deltaRow, int dCol) const {
        return cells[deltaRow * spec.nD + dCol];
    }
    double dValue(int col) const;
    double deltaValue(int row) const;
};

MapCell classify(const FieldSpec& spec, double D, double delta);

/// Classify every cell; partitioned across worker threads, output identical
/// for any partitioning. threads <= 0 picks the hardware concurrency.
MapGrid sweep(const GridSpec& grid, int threads = 0);

/// Smallest grid D at which any feasible cell is not class A.
/// Throws std::invalid_argument if the grid does not bracket (d-1)/2d or no
/// such cell exists.
double empiricalThreshold(const MapGrid& grid);

/// CSV: header `d,D,delta,u,x,y,class`, one row per cell, LF endings,
/// round-trip double formatting.
void writeCsv(const MapGrid& grid, std::ostream& out);

/// PGM (P2) image, one pixel per cell: A=0, C=85, B=170, INFEASIBLE=255.
void writePgm(const MapGrid& grid, std::ostream& out);

}  // namespace qkd
