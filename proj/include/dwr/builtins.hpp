#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dwr/blocks.hpp"
#include "dwr/complex_matrix.hpp"
#include "dwr/errors.hpp"

namespace dwr {

struct BuiltinMatrix {
    std::string name;
    std::string description;
    ComplexMatrix matrix;
};

/// The named matrices used across reports and tests, addressable via
/// `analyze --builtin NAME`.
inline const std::vector<BuiltinMatrix>& builtin_matrices() {
    static const std::vector<BuiltinMatrix> table = [] {
        const Complex i1(0.0, 1.0);
        std::vector<BuiltinMatrix> t;
        t.push_back({"t1", "[[0,1],[2,0]]", {{0.0, 1.0}, {2.0, 0.0}}});
        t.push_back({"t2", "[[0,2],[0,0]]", {{0.0, 2.0}, {0.0, 0.0}}});
        t.push_back({"t3", "[[1,1],[0,0]]", {{1.0, 1.0}, {0.0, 0.0}}});
        t.push_back({"t4", "[[1,1],[0,1]]", {{1.0, 1.0}, {0.0, 1.0}}});
        t.push_back({"i2", "2x2 identity", ComplexMatrix::identity(2)});
        t.push_back({"s", "[[0,1],[0,0]]", {{0.0, 1.0}, {0.0, 0.0}}});
        t.push_back({"diagm1m2", "diag(-1,-2)", {{-1.0, 0.0}, {0.0, -2.0}}});
        t.push_back({"diag1m1", "diag(1,-1)", {{1.0, 0.0}, {0.0, -1.0}}});
        t.push_back({"prop22",
                     "3x3 counterexample to the converse of the norm-square equality",
                     {{0.375, 0.0, 0.0}, {0.0, 0.0, 0.5}, {0.0, 0.0, 0.0}}});
        {
            BlockSpec spec;
            spec.layout = BlockLayout::upper_left;
            spec.b = ComplexMatrix{{0.0, 2.0}, {0.0, 0.0}};
            t.push_back({"ib2", "[[I,B],[0,0]], B=[[0,2],[0,0]]", assemble(spec)});
        }
        {
            BlockSpec spec;
            spec.layout = BlockLayout::nilpotent;
            spec.b = ComplexMatrix{{0.0, 1.0}, {0.0, 1.0}};
            t.push_back({"nil1", "[[0,B],[0,0]], B=[[0,1],[0,1]]", assemble(spec)});
        }
        {
            BlockSpec spec;
            spec.layout = BlockLayout::nilpotent;
            spec.b = ComplexMatrix{{0.3, 0.4}, {0.0, 0.5}};
            t.push_back({"nil2", "[[0,B],[0,0]], B=[[0.3,0.4],[0,0.5]]", assemble(spec)});
        }
        {
            BlockSpec spec;
            spec.layout = BlockLayout::antidiag;
            spec.a = ComplexMatrix::identity(2);
            spec.b = ComplexMatrix::identity(2);
            t.push_back({"antiid", "[[0,I],[I,0]]", assemble(spec)});
        }
        {
            BlockSpec spec;
            spec.layout = BlockLayout::antidiag;
            spec.a = ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}};
            spec.b = ComplexMatrix{{Complex(0.0, 0.0), Complex(0.0, 0.0)},
                                   {Complex(0.0, 0.0), i1}};
            t.push_back({"antie11", "[[0,A],[B,0]], A=diag(1,0), B=diag(0,i)", assemble(spec)});
        }
        return t;
    }();
    return table;
}

inline const ComplexMatrix& builtin_matrix(const std::string& name) {
    for (const auto& b : builtin_matrices())
        if (b.name == name) return b.matrix;
    std::string names;
    for (const auto& b : builtin_matrices()) {
        if (!names.empty()) names += ", ";
        names += b.name;
    }
    throw ParseError("unknown builtin '" + name + "' (available: " + names + ")");
}

} // namespace dwr
