"""The 8x8 worked example: a Lena block, its RMI key, and their sum."""

HOST = [
    [195, 195, 196, 197, 197, 198, 199, 199],
    [196, 196, 196, 197, 197, 197, 198, 198],
    [197, 197, 197, 197, 196, 196, 196, 196],
    [199, 198, 198, 197, 196, 195, 194, 194],
    [199, 198, 197, 196, 195, 194, 193, 193],
    [198, 198, 197, 196, 195, 194, 193, 193],
    [197, 196, 196, 195, 195, 194, 194, 194],
    [196, 196, 195, 195, 195, 194, 194, 194],
]

KEY = [
    [2, 2, 9, 8, 2, 6, 3, 6],
    [7, 2, 0, 0, 0, 0, 8, 3],
    [9, 1, 3, 0, 4, 0, 1, 1],
    [2, 6, 3, 0, 7, 2, 4, 2],
    [9, 3, 0, 6, 3, 6, 7, 2],
    [5, 5, 3, 7, 7, 0, 5, 2],
    [5, 1, 0, 7, 5, 8, 0, 5],
    [2, 0, 5, 5, 9, 7, 6, 6],
]

WATERMARKED = [
    [197, 197, 205, 205, 199, 204, 202, 205],
    [203, 198, 196, 197, 197, 197, 206, 201],
    [206, 198, 200, 197, 200, 196, 197, 197],
    [201, 204, 201, 197, 203, 197, 198, 196],
    [208, 201, 197, 202, 198, 200, 200, 195],
    [203, 203, 200, 203, 202, 194, 198, 195],
    [202, 197, 196, 202, 200, 202, 194, 199],
    [198, 196, 200, 200, 204, 201, 200, 200],
]
