#pragma once

// Stateless request handlers behind the HTTP facade. Each handler maps a
// request body to a status code and a JSON body; nothing is shared between
// calls, so they can run concurrently without locks.

#include <string>
#include <string_view>

#include <json.hpp>

#include "config.hpp"
#include "evaluation.hpp"
#include "synthesis.hpp"

namespace slideocam::service
{

inline constexpr std::string_view api_prefix = "/api/v1";

struct Reply
{
    int status = 200;
    json body;
};

namespace detail
{

inline Reply bad_request(const std::string& message)
{
    return {400, {{"error", "bad_request"}, {"message", message}}};
}

inline bool parse_body(std::string_view body, json& out, Reply& error)
{
    out = json::parse(body.begin(), body.end(), nullptr, false);
    if (out.is_discarded())
    {
        error = bad_request("body is not valid JSON");
        return false;
    }
    return true;
}

} // namespace detail

[[nodiscard]] inline Reply health()
{
    return {200, {{"status", "ok"}}};
}

/// POST /api/v1/evaluate: 200 EvaluateResponse, 400 malformed, 422 invalid design.
[[nodiscard]] inline Reply evaluate(std::string_view body)
{
    json doc;
    Reply error;
    if (!detail::parse_body(body, doc, error))
        return error;
    try
    {
        return {200, evaluation_to_json(slideocam::evaluate(parse_design_config(doc)))};
    }
    catch (const ConfigError& e)
    {
        return detail::bad_request(e.what());
    }
    catch (const InvalidDesign& e)
    {
        return {422, invalid_design_to_json(e)};
    }
}

/// POST /api/v1/synthesize: 200 SynthesisOutcome, 400 malformed, 409 infeasible.
[[nodiscard]] inline Reply synthesize(std::string_view body)
{
    json doc;
    Reply error;
    if (!detail::parse_body(body, doc, error))
        return error;
    try
    {
        const SynthesisRequest request = parse_synthesis_request(doc);
        return {200, outcome_to_json(slideocam::synthesize(request), request)};
    }
    catch (const ConfigError& e)
    {
        return detail::bad_request(e.what());
    }
    catch (const SynthesisInfeasible& e)
    {
        return {409, infeasible_to_json(e)};
    }
    catch (const CamError& e)
    {
        return detail::bad_request(e.what());
    }
}

} // namespace slideocam::service
