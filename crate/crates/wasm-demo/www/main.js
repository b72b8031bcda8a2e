import init, {
  ruleNodes, deltoidBoundary, deltoidBox, triangleBox, chebHeatmap, trigField,
} from "./pkg/g2cub_wasm.js";

const $ = (id) => document.getElementById(id);

// maps a box [x0, x1, y0, y1] onto a canvas with equal aspect and a margin
function frame(canvas, box, pad = 16) {
  const [x0, x1, y0, y1] = box;
  const s = Math.min((canvas.width - 2 * pad) / (x1 - x0), (canvas.height - 2 * pad) / (y1 - y0));
  const ox = (canvas.width - s * (x1 - x0)) / 2;
  const oy = (canvas.height - s * (y1 - y0)) / 2;
  return {
    s, ox, oy,
    w: Math.round(s * (x1 - x0)),
    h: Math.round(s * (y1 - y0)),
    px: (x) => ox + s * (x - x0),
    py: (y) => oy + s * (y1 - y),
  };
}

// diverging blue-white-red, v in [-1, 1]
function color(v) {
  const t = Math.max(-1, Math.min(1, v));
  if (t >= 0) return [255, Math.round(255 * (1 - t)), Math.round(255 * (1 - t))];
  return [Math.round(255 * (1 + t)), Math.round(255 * (1 + t)), 255];
}

function paint(canvas, box, field, w, h, info) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const f = frame(canvas, box);
  let m = 0;
  for (const v of field) if (!Number.isNaN(v)) m = Math.max(m, Math.abs(v));
  const img = ctx.createImageData(w, h);
  for (let i = 0; i < field.length; i++) {
    const v = field[i];
    if (Number.isNaN(v)) continue;
    const [r, g, b] = color(m > 0 ? v / m : 0);
    img.data.set([r, g, b, 255], 4 * i);
  }
  ctx.putImageData(img, Math.round(f.ox), Math.round(f.oy));
  info.textContent = `max |value| = ${m.toPrecision(6)}`;
  return f;
}

function outline(ctx, f, pts) {
  ctx.beginPath();
  for (let i = 0; i < pts.length; i += 2) {
    const [x, y] = [f.px(pts[i]), f.py(pts[i + 1])];
    i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y);
  }
  ctx.closePath();
  ctx.stroke();
}

function int(id) {
  return parseInt($(id).value, 10) || 0;
}

let dbox, tbox, edge;

function drawNodes() {
  const canvas = $("nodes");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const f = frame(canvas, dbox);
  ctx.strokeStyle = "#444";
  outline(ctx, f, edge);
  try {
    const v = ruleNodes($("rule").value, int("rule-n"));
    let wmax = 0;
    for (let i = 2; i < v.length; i += 3) wmax = Math.max(wmax, v[i]);
    ctx.fillStyle = "#c0392b";
    for (let i = 0; i < v.length; i += 3) {
      const r = 1.5 + 5 * Math.sqrt(v[i + 2] / wmax);
      ctx.beginPath();
      ctx.arc(f.px(v[i]), f.py(v[i + 1]), r, 0, 2 * Math.PI);
      ctx.fill();
    }
    $("nodes-info").textContent = `${v.length / 3} nodes; dot area follows weight`;
  } catch (e) {
    $("nodes-info").textContent = e.message ?? String(e);
  }
}

function drawCheb() {
  const canvas = $("cheb");
  const f = frame(canvas, dbox);
  const [a, b] = $("kind").value.split(",").map(Number);
  try {
    const g = chebHeatmap(a, b, int("ck1"), int("ck2"), f.w, f.h);
    paint(canvas, dbox, g, f.w, f.h, $("cheb-info"));
    const ctx = canvas.getContext("2d");
    ctx.strokeStyle = "#444";
    outline(ctx, f, edge);
  } catch (e) {
    canvas.getContext("2d").clearRect(0, 0, canvas.width, canvas.height);
    $("cheb-info").textContent = e.message ?? String(e);
  }
}

function drawTrig() {
  const canvas = $("trig");
  const f = frame(canvas, tbox);
  try {
    const g = trigField($("family").value, int("tk1"), int("tk2"), f.w, f.h);
    paint(canvas, tbox, g, f.w, f.h, $("trig-info"));
  } catch (e) {
    canvas.getContext("2d").clearRect(0, 0, canvas.width, canvas.height);
    $("trig-info").textContent = e.message ?? String(e);
  }
}

await init();
dbox = Array.from(deltoidBox());
tbox = Array.from(triangleBox());
edge = deltoidBoundary(600);

for (const id of ["rule", "rule-n"]) $(id).addEventListener("input", drawNodes);
for (const id of ["kind", "ck1", "ck2"]) $(id).addEventListener("input", drawCheb);
for (const id of ["family", "tk1", "tk2"]) $(id).addEventListener("input", drawTrig);
drawNodes();
drawCheb();
drawTrig();
