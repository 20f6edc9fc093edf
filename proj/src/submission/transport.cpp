/*
 * Copyright 2026 The shaclform Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "net/http.hpp"
#include "shaclform/submission.hpp"

namespace shaclform::submission {

SubmitResult HttpTransport::submit(const rdf::Graph&, const std::string& update) {
    auto response = net::request("POST", endpoint_, timeout_, update, "application/sparql-update");
    SubmitResult result;
    if (!response.ok()) {
        result.cause = response.error;
        return result;
    }
    result.status = response.status;
    result.body = response.body;
    result.ok = response.status >= 200 && response.status < 300;
    if (!result.ok) result.cause = "endpoint answered " + std::to_string(response.status);
    return result;
}

SubmitResult DryRunTransport::submit(const rdf::Graph& graph, const std::string&) {
    *out_ << rdf::serialize_turtle(graph);
    out_->flush();
    SubmitResult result;
    result.ok = static_cast<bool>(*out_);
    if (!result.ok) result.cause = "could not write the dry-run output";
    return result;
}

}  // namespace shaclform::submission
