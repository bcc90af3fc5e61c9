/**
 * Entry point: wire the session to the DOM and load the bundled fixture.
 * The service base URL defaults to the local dev server and can be
 * overridden with ?service=http://host:port.
 */

import { RankServiceClient } from './api.js';
import { mountPanel } from './dom.js';
import { WhatIfSession } from './session.js';

const params = new URLSearchParams(window.location.search);
const baseUrl = params.get('service') ?? 'http://127.0.0.1:8000';

const session = new WhatIfSession(new RankServiceClient(baseUrl));
mountPanel(session);
session.loadFixture();
