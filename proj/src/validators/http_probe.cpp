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
#include "shaclform/rdf.hpp"
#include "shaclform/validators.hpp"

namespace shaclform::validators {

ProbeResponse HttpProbe::probe(const std::string& url) const {
    std::string current = url;
    for (int hop = 0;; ++hop) {
        auto head = net::request("HEAD", current, timeout);
        if (!head.ok()) return ProbeResponse::failed(head.error);
        auto response = head;
        if (response.status == 405) {
            response = net::request("GET", current, timeout);
            if (!response.ok()) return ProbeResponse::failed(response.error);
        }
        bool redirect = response.status >= 300 && response.status < 400 && !response.location.empty();
        if (!redirect || hop >= max_redirects) return ProbeResponse::with_status(response.status);
        current = rdf::resolve_iri(current, response.location);
    }
}

}  // namespace shaclform::validators
