#pragma once

/**
 * @file eval.hpp
 * @brief One-line expression evaluator: `op(arg, arg; ...) @ ring n=N`.
 *
 * Arguments split at top-level ',' or ';' and may themselves be calls.
 * Without a suffix the ring is the caller's default (trig if any e[...] mode
 * appears) and n is the largest index mentioned.
 */

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "leibform/decompose.hpp"
#include "leibform/diffop.hpp"

namespace leibform {

/// Raised for evaluation failures; the message names the operation.
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EvalOptions {
    std::string ring;  // empty: infer
    int n = 0;         // 0: infer
};

struct EvalResult {
    std::string text;
    std::string ring;
    int n = 0;
};

/// Throws ParseError (with position) or EvalError.
EvalResult eval_expr(std::string_view expr, const EvalOptions& defaults = {});

/// Operation names accepted by eval_expr.
const std::vector<std::string>& eval_functions();

nlohmann::ordered_json witness_json(const BracketWitness& w);
nlohmann::ordered_json witness_json(const SquareWitness& w);
nlohmann::ordered_json factorization_json(const DiffOp& D, const Factorization& f);

}  // namespace leibform
