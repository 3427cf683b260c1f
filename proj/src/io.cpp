#include "x2y2/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace x2y2 {

using nlohmann::json;

void export_operator(const SparseHermitianOperator& op, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("export_operator: cannot open " + path);
    for (int k = 0; k < op.mat.outerSize(); ++k) {
        for (SparseComplex::InnerIterator it(op.mat, k); it; ++it) {
            if (it.row() > it.col()) continue;  // upper triangle only
            std::fprintf(f, "%ld %ld %.17g %.17g\n", static_cast<long>(it.row()),
                         static_cast<long>(it.col()), it.value().real(),
                         it.value().imag());
        }
    }
    std::fclose(f);

    json meta;
    meta["dimension"] = op.dimension();
    meta["kind"] = to_string(op.kind);
    meta["spinor_components"] = op.spinor_components;
    meta["box"] = {{"half_width_x", op.box_half_width_x},
                   {"half_width_y", op.box_half_width_y},
                   {"n_x", op.box_n_x},
                   {"n_y", op.box_n_y}};
    meta["spec"] = {{"alpha", op.alpha}, {"lambda", op.lambda}};
    std::ofstream mf(path + ".json");
    mf << meta.dump(2) << "\n";
}

SparseHermitianOperator import_operator(const std::string& path) {
    std::ifstream mf(path + ".json");
    if (!mf) throw std::runtime_error("import_operator: missing sidecar " + path + ".json");
    json meta = json::parse(mf);

    SparseHermitianOperator op;
    op.kind = operator_kind_from_string(meta.at("kind").get<std::string>());
    op.spinor_components = meta.at("spinor_components").get<int>();
    op.box_half_width_x = meta.at("box").at("half_width_x").get<double>();
    op.box_half_width_y = meta.at("box").at("half_width_y").get<double>();
    op.box_n_x = meta.at("box").at("n_x").get<int>();
    op.box_n_y = meta.at("box").at("n_y").get<int>();
    op.alpha = meta.at("spec").at("alpha").get<double>();
    op.lambda = meta.at("spec").at("lambda").get<double>();
    long dim = meta.at("dimension").get<long>();

    std::ifstream f(path);
    if (!f) throw std::runtime_error("import_operator: cannot open " + path);
    std::vector<Eigen::Triplet<Complex>> trips;
    long i, j;
    double re, im;
    while (f >> i >> j >> re >> im) {
        trips.emplace_back(i, j, Complex(re, im));
        if (i != j) trips.emplace_back(j, i, Complex(re, -im));
    }
    op.mat.resize(dim, dim);
    op.mat.setFromTriplets(trips.begin(), trips.end());
    return op;
}

std::string to_json_line(const SpectralResult& r) {
    json j;
    j["record"] = "spectral";
    j["eigenvalues"] = r.eigenvalues;
    j["residual_norms"] = r.residual_norms;
    j["solver"] = r.solver;
    j["iterations"] = r.iterations;
    return j.dump();
}

std::string to_json_line(const CountResult& r) {
    json j;
    j["record"] = "count";
    j["n_negative"] = r.n_negative;
    j["shift"] = r.shift;
    j["method"] = r.method;
    j["perturbation"] = r.perturbation;
    j["alpha"] = r.alpha;
    j["lambda"] = r.lambda;
    j["box_half_width"] = r.box_half_width;
    j["box_n"] = r.box_n;
    return j.dump();
}

void append_json_line(const std::string& path, const std::string& line) {
    std::ofstream f(path, std::ios::app);
    if (!f) throw std::runtime_error("append_json_line: cannot open " + path);
    f << line << "\n";
}

}  // namespace x2y2
