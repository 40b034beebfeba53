// Demo page wiring: three plots backed by the wasm module.
// Build it first: wasm-pack build crates/wasm --target web
import init, {
  zeeman_fan_json,
  spectrum_json,
  wavefunction_json,
} from "../pkg/qosc_wasm.js";

const status = document.getElementById("status");

const PALETTE = ["#2563eb", "#dc2626", "#059669", "#d97706", "#7c3aed", "#0891b2", "#be185d"];

function plotFrame(canvas, xRange, yRange, xLabel, yLabel) {
  const ctx = canvas.getContext("2d");
  const dpr = window.devicePixelRatio || 1;
  const w = canvas.clientWidth, h = canvas.clientHeight;
  canvas.width = w * dpr;
  canvas.height = h * dpr;
  ctx.scale(dpr, dpr);
  ctx.clearRect(0, 0, w, h);
  const margin = { l: 54, r: 14, t: 12, b: 34 };
  const sx = (x) => margin.l + ((x - xRange[0]) / (xRange[1] - xRange[0])) * (w - margin.l - margin.r);
  const sy = (y) => h - margin.b - ((y - yRange[0]) / (yRange[1] - yRange[0])) * (h - margin.t - margin.b);

  ctx.strokeStyle = "#d7dce4";
  ctx.fillStyle = "#5a6578";
  ctx.font = "11px system-ui";
  ctx.lineWidth = 1;
  const xTicks = 6, yTicks = 5;
  for (let i = 0; i <= xTicks; i++) {
    const x = xRange[0] + (i / xTicks) * (xRange[1] - xRange[0]);
    ctx.beginPath(); ctx.moveTo(sx(x), margin.t); ctx.lineTo(sx(x), h - margin.b); ctx.stroke();
    ctx.fillText(x.toPrecision(3), sx(x) - 10, h - margin.b + 16);
  }
  for (let i = 0; i <= yTicks; i++) {
    const y = yRange[0] + (i / yTicks) * (yRange[1] - yRange[0]);
    ctx.beginPath(); ctx.moveTo(margin.l, sy(y)); ctx.lineTo(w - margin.r, sy(y)); ctx.stroke();
    ctx.fillText(y.toPrecision(3), 6, sy(y) + 4);
  }
  ctx.fillStyle = "#1b2330";
  ctx.fillText(xLabel, (w - margin.l - margin.r) / 2 + margin.l - 20, h - 8);
  ctx.save();
  ctx.translate(12, (h - margin.t - margin.b) / 2 + margin.t + 20);
  ctx.rotate(-Math.PI / 2);
  ctx.fillText(yLabel, 0, 0);
  ctx.restore();
  return { ctx, sx, sy };
}

function polyline(frame, xs, ys, color, width = 1.6, dash = []) {
  const { ctx, sx, sy } = frame;
  ctx.strokeStyle = color;
  ctx.lineWidth = width;
  ctx.setLineDash(dash);
  ctx.beginPath();
  xs.forEach((x, i) => (i === 0 ? ctx.moveTo(sx(x), sy(ys[i])) : ctx.lineTo(sx(x), sy(ys[i]))));
  ctx.stroke();
  ctx.setLineDash([]);
}

function extent(values, pad = 0.06) {
  let lo = Math.min(...values), hi = Math.max(...values);
  if (lo === hi) { lo -= 1; hi += 1; }
  const span = hi - lo;
  return [lo - pad * span, hi + pad * span];
}

function slider(id, fmt = (v) => v) {
  const input = document.getElementById(id);
  const out = document.getElementById(id + "-out");
  const read = () => Number(input.value);
  const show = () => { if (out) out.textContent = fmt(read()); };
  show();
  return { input, read, show };
}

// --- Panel 1: Zeeman fan ---------------------------------------------------
const fan = {
  omega: slider("fan-omega"),
  ell: slider("fan-ell"),
  bmax: slider("fan-bmax"),
  levels: slider("fan-levels"),
};

function drawFan() {
  Object.values(fan).forEach((s) => s.show());
  const doc = JSON.parse(
    zeeman_fan_json(fan.omega.read(), 1.0, 1.0, fan.ell.read(), fan.bmax.read(), 60, fan.levels.read())
  );
  const all = doc.lines.flatMap((l) => l.energies);
  const frame = plotFrame(
    document.getElementById("fan-canvas"),
    [0, doc.b_grid[doc.b_grid.length - 1]],
    extent(all),
    "B",
    "E"
  );
  const ell = fan.ell.read();
  for (const line of doc.lines) {
    const color = PALETTE[(line.mu + ell) % PALETTE.length];
    polyline(frame, doc.b_grid, line.energies, color, line.n === 0 ? 1.8 : 1.1);
  }
  frame.ctx.font = "12px system-ui";
  doc.lines
    .filter((l) => l.n === 0)
    .forEach((l) => {
      const color = PALETTE[(l.mu + ell) % PALETTE.length];
      frame.ctx.fillStyle = color;
      const y = l.energies[l.energies.length - 1];
      frame.ctx.fillText(`μ=${l.mu}`, frame.sx(doc.b_grid[doc.b_grid.length - 1]) - 34, frame.sy(y) - 4);
    });
}

// --- Panel 2: spectrum vs basis scale ---------------------------------------
const sp = {
  system: document.getElementById("sp-system"),
  field: slider("sp-field"),
  lambda: slider("sp-lambda"),
  size: slider("sp-size"),
};

function drawSpectrum() {
  sp.field.show(); sp.lambda.show(); sp.size.show();
  const system = sp.system.value;
  const field = sp.field.read();
  const doc = JSON.parse(
    spectrum_json(
      system, 1.0, 1.0,
      system === "efield" ? field : 0.0,
      system === "bfield" ? field : 0.0,
      1.0, 1, 1, sp.lambda.read(), sp.size.read(), 5
    )
  );
  const canvas = document.getElementById("sp-canvas");
  const all = doc.matrix.concat(doc.analytic, doc.convergence_ground);
  const frame = plotFrame(canvas, [0, 1], extent(all), "", "E");
  const { ctx, sx, sy } = frame;

  // left half: level sticks, analytic as lines, matrix as dots
  doc.analytic.forEach((e, i) => {
    polyline(frame, [0.02, 0.40], [e, e], "#9aa4b2", 1.0, [4, 3]);
    ctx.fillStyle = PALETTE[i % PALETTE.length];
    ctx.beginPath();
    ctx.arc(sx(0.21), sy(doc.matrix[i]), 4, 0, 2 * Math.PI);
    ctx.fill();
  });
  ctx.fillStyle = "#1b2330";
  ctx.font = "12px system-ui";
  ctx.fillText(`λ = ${doc.lambda.toFixed(4)}  (λ* = ${doc.lambda_star.toFixed(4)},  ξ = ${doc.xi.toExponential(2)})`, sx(0.02), sy(all.length ? Math.max(...all) : 1) + 14);

  // right half: ground-level convergence staircase over N
  const ns = doc.convergence_sizes;
  const xs = ns.map((n, i) => 0.5 + (0.48 * i) / Math.max(1, ns.length - 1));
  polyline(frame, xs, doc.convergence_ground, "#2563eb", 1.8);
  doc.convergence_ground.forEach((e, i) => {
    ctx.fillStyle = "#2563eb";
    ctx.beginPath(); ctx.arc(sx(xs[i]), sy(e), 3, 0, 2 * Math.PI); ctx.fill();
    ctx.fillStyle = "#5a6578";
    ctx.fillText(`N=${ns[i]}`, sx(xs[i]) - 10, sy(e) - 8);
  });
  polyline(frame, [0.5, 0.98], [doc.analytic[0], doc.analytic[0]], "#9aa4b2", 1.0, [4, 3]);
}

// --- Panel 3: wavefunction ---------------------------------------------------
const wf = {
  zeta: slider("wf-zeta"),
  ell: slider("wf-ell"),
  level: slider("wf-level"),
  lambda: slider("wf-lambda"),
};

function drawWavefunction() {
  Object.values(wf).forEach((s) => s.show());
  const doc = JSON.parse(
    wavefunction_json(
      "efield", 1.0, 1.0, wf.zeta.read(), 0.0, 1.0, wf.ell.read(), 0,
      wf.lambda.read(), wf.level.read(), 64, 6.0, 200
    )
  );
  const frame = plotFrame(
    document.getElementById("wf-canvas"),
    [0, doc.radii[doc.radii.length - 1]],
    extent(doc.values.concat([0])),
    "r",
    "u(r)"
  );
  polyline(frame, [0, doc.radii[doc.radii.length - 1]], [0, 0], "#9aa4b2", 1.0, [4, 3]);
  polyline(frame, doc.radii, doc.values, "#2563eb", 2.0);
  frame.ctx.fillStyle = "#1b2330";
  frame.ctx.font = "12px system-ui";
  frame.ctx.fillText(`E = ${doc.energy.toFixed(8)}`, 64, 24);
}

function redrawAll() {
  try {
    status.textContent = "";
    drawFan();
    drawSpectrum();
    drawWavefunction();
  } catch (err) {
    status.textContent = String(err);
  }
}

async function main() {
  try {
    await init();
  } catch (err) {
    status.textContent =
      "wasm module not found — run `wasm-pack build crates/wasm --target web` first (" + err + ")";
    return;
  }
  for (const s of [fan.omega, fan.ell, fan.bmax, fan.levels, sp.field, sp.lambda, sp.size, wf.zeta, wf.ell, wf.level, wf.lambda]) {
    s.input.addEventListener("input", redrawAll);
  }
  sp.system.addEventListener("change", redrawAll);
  window.addEventListener("resize", redrawAll);
  redrawAll();
}

main();
