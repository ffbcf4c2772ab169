import { OracleClient } from './api.js'
import { mount } from './app.js'

// Served from the oracle service itself (abalone serve --ui), so the API
// lives at the page's origin.
const root = document.getElementById('app')
if (!root) throw new Error('missing #app element')
mount(root, new OracleClient(''))
