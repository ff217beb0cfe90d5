export { DtypeTag, HalfBits, SeriesArray, tagOf, xTagOf } from "./dtypes.js";
export {
  DownsampleOptions,
  Downsampler,
  EveryNthDownsampler,
  LTTBDownsampler,
  M4Downsampler,
  MinMaxDownsampler,
  MinMaxLTTBDownsampler,
} from "./downsamplers.js";
