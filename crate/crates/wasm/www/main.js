import init, { sampleCover, planeView, partitionSummary, embedText, securityTable } from "./pkg/di3_wasm.js";

const $ = (id) => document.getElementById(id);
let cover = null;

function header(pgm) {
  const text = new TextDecoder("latin1").decode(pgm.slice(0, 64)).replace(/#[^\n]*\n/g, " ");
  const [, w, h] = text.trim().split(/\s+/).map(Number);
  return { width: w, height: h };
}

function draw(canvas, rgba, width, height) {
  canvas.width = width;
  canvas.height = height;
  canvas.getContext("2d").putImageData(new ImageData(new Uint8ClampedArray(rgba), width, height), 0, 0);
}

function guard(fn) {
  return () => {
    $("error").textContent = "";
    try {
      fn();
    } catch (e) {
      $("error").textContent = String(e.message ?? e);
    }
  };
}

const thresholds = () => [Number($("low").value), Number($("high").value)];

const showPlanes = guard(() => {
  if (!cover) return;
  const { width, height } = header(cover);
  const plane = Number($("plane").value);
  $("plane-label").textContent = plane;
  draw($("plane-canvas"), planeView(cover, ...thresholds(), plane), width, height);
  $("summary").textContent = partitionSummary(cover, ...thresholds());
});

function setCover(bytes) {
  cover = bytes;
  const { width, height } = header(cover);
  $("cover-info").textContent = `${width} x ${height}`;
  showPlanes();
}

const embed = guard(() => {
  if (!cover) return;
  const { width, height } = header(cover);
  const view = embedText(cover, $("message").value, $("key").value, ...thresholds(), $("prerandomize").checked);
  const bits = view.capacityBits;
  // The channel is drawn in image order, wrapped to the cover width.
  const rows = Math.ceil(bits / width);
  const pad = (rgba) => {
    const out = new Uint8Array(width * rows * 4);
    out.set(rgba);
    return out;
  };
  draw($("lsc-before"), pad(view.lscBefore), width, rows);
  draw($("lsc-after"), pad(view.lscAfter), width, rows);
  $("embed-info").textContent =
    `channel bits: ${bits}\n` +
    `chi-square attack likelihood before: ${view.likelihoodBefore.toFixed(4)}\n` +
    `chi-square attack likelihood after:  ${view.likelihoodAfter.toFixed(4)}`;
  const link = $("download");
  URL.revokeObjectURL(link.href);
  link.href = URL.createObjectURL(new Blob([view.stegoPgm], { type: "image/x-portable-graymap" }));
  link.hidden = false;
});

const enumerate = guard(() => {
  const n = Number($("n").value);
  const table = JSON.parse(securityTable($("embedder").value, n, Number($("p").value), Number($("strategies").value)));
  const r = table.report;
  $("report").textContent =
    `total: ${r.total}\nuniform: ${r.uniform}\nmax deviation: ${r.max_deviation_num}/${r.max_deviation_den}`;
  const cols = 8;
  const cells = table.counts.map((c, y) => `<td title="${y.toString(2).padStart(n, "0")}">${c}</td>`);
  const rows = [];
  for (let i = 0; i < cells.length; i += cols) rows.push(`<tr>${cells.slice(i, i + cols).join("")}</tr>`);
  $("counts").innerHTML = rows.join("");
});

await init();
$("synth").onclick = guard(() => setCover(sampleCover(128, 128, Number($("seed").value))));
$("file").onchange = async (e) => {
  const file = e.target.files[0];
  if (!file) return;
  const bytes = new Uint8Array(await file.arrayBuffer());
  guard(() => setCover(bytes))();
};
for (const id of ["low", "high", "plane"]) $(id).oninput = showPlanes;
$("embed").onclick = embed;
$("enumerate").onclick = enumerate;
$("synth").click();
