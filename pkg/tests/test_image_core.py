import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from rmiwm import GrayImage, extract_block, load_pgm, save_pgm
from rmiwm.errors import (
    MalformedHeader,
    MalformedPayload,
    OutOfBounds,
    PixelValueOutOfRange,
    TruncatedPayload,
)

images = st.tuples(st.integers(1, 12), st.integers(1, 12)).flatmap(
    lambda hw: arrays(np.uint8, hw).map(GrayImage)
)


def test_minimal_p5():
    img = load_pgm(b"P5\n1 1\n255\n\x00")
    assert (img.width, img.height, img.flat()) == (1, 1, [0])


def test_p2_top_left_block():
    img = load_pgm(b"P2\n2 2\n255\n195 195 196 196\n")
    assert (img.width, img.height, img.flat()) == (2, 2, [195, 195, 196, 196])


def test_header_comments_and_mixed_whitespace():
    data = b"P2 # comment\n# another\n3\t1 # w h\n255\n1\n2\n3"
    assert load_pgm(data).flat() == [1, 2, 3]
    assert load_pgm(b"P5\n#c\n2 1\n#c\n255\n\x07\x08").flat() == [7, 8]


@pytest.mark.parametrize(
    "data",
    [
        b"P5\n2 2\n65535\n" + b"\x00" * 8,
        b"P6\n1 1\n255\n\x00\x00\x00",
        b"P5\nx 1\n255\n\x00",
        b"P5\n0 1\n255\n",
        b"P5\n1 1\n",
        b"P5\n-1 1\n255\n\x00",
        b"P2\n1 1\n254\n0",
    ],
)
def test_malformed_header(data):
    with pytest.raises(MalformedHeader):
        load_pgm(data)


def test_truncated_payload():
    with pytest.raises(TruncatedPayload):
        load_pgm(b"P5\n2 2\n255\n\x00\x00\x00")
    with pytest.raises(TruncatedPayload):
        load_pgm(b"P2\n2 2\n255\n1 2 3\n")


def test_trailing_payload_rejected():
    with pytest.raises(MalformedPayload):
        load_pgm(b"P5\n1 1\n255\n\x00\x00")
    with pytest.raises(MalformedPayload):
        load_pgm(b"P2\n1 1\n255\n1 2\n")


def test_p2_value_out_of_range():
    with pytest.raises(PixelValueOutOfRange):
        load_pgm(b"P2\n2 1\n255\n0 256\n")


def test_p2_comment_in_raster_rejected():
    with pytest.raises(MalformedPayload):
        load_pgm(b"P2\n2 1\n255\n0 # x\n1\n")


def test_save_binary_exact_bytes():
    assert save_pgm(GrayImage([[0]]), "binary") == b"P5\n1 1\n255\n\x00"
    img = GrayImage([[1, 2, 3], [4, 5, 6]])
    assert save_pgm(img) == b"P5\n3 2\n255\n\x01\x02\x03\x04\x05\x06"


def test_save_ascii_boundary_values():
    img = GrayImage([[255, 0]])
    assert load_pgm(save_pgm(img, "ascii")) == img


@given(images, st.sampled_from(["binary", "ascii"]))
def test_roundtrip(img, variant):
    assert load_pgm(save_pgm(img, variant)) == img


def test_gray_image_rejects_bad_values():
    with pytest.raises(PixelValueOutOfRange):
        GrayImage([[256]])
    with pytest.raises(PixelValueOutOfRange):
        GrayImage([[-1]])


def test_images_are_immutable():
    src = np.array([[1, 2]], dtype=np.uint8)
    img = GrayImage(src)
    src[0, 0] = 9
    assert img.flat() == [1, 2]
    with pytest.raises(ValueError):
        img.pixels[0, 0] = 5


def test_extract_block_identity_and_corner():
    img = GrayImage([[1, 2], [3, 4]])
    assert extract_block(img, 0, 0, 2, 2) == img
    assert extract_block(img, 1, 1, 1, 1).flat() == [4]


def test_extract_block_out_of_bounds():
    img = GrayImage([[1, 2], [3, 4]])
    with pytest.raises(OutOfBounds):
        extract_block(img, 0, 0, img.width + 1, 1)
    with pytest.raises(OutOfBounds):
        extract_block(img, 1, 0, 2, 1)


@given(images, st.data())
def test_extract_block_matches_brute_force(img, data):
    x = data.draw(st.integers(0, img.width - 1))
    y = data.draw(st.integers(0, img.height - 1))
    w = data.draw(st.integers(1, img.width - x))
    h = data.draw(st.integers(1, img.height - y))
    block = extract_block(img, x, y, w, h)
    rows = img.pixels.tolist()
    expected = [rows[y + j][x + i] for j in range(h) for i in range(w)]
    assert (block.width, block.height) == (w, h)
    assert block.flat() == expected
