"""Adjacency matrices transcribed from the source tables.

Rows are stored exactly as printed; ``PRINTED_ANNOTATION`` holds the
printed verdict ("twins") or printed determinant for each six-vertex entry.
"""

MATRICES = {
    "G4_1": ("0011", "0011", "1100", "1100"),
    "G4_2": ("0011", "0011", "1101", "1110"),
    "G4_3": ("0111", "1011", "1101", "1110"),
    "G5_1": ("00001", "00001", "00001", "00001", "11110"),
    "G5_2": ("00001", "00001", "00011", "00101", "11110"),
    "G5_3": ("00011", "00011", "00011", "11100", "11100"),
    "G5_4": ("00011", "00011", "00011", "11101", "11110"),
    "G5_5": ("00011", "00101", "01001", "10001", "11110"),
    "G5_6": ("00011", "00111", "01011", "11100", "11100"),
    "G5_7": ("00011", "00111", "01011", "11101", "11110"),
    "G5_8": ("00111", "00111", "11001", "11001", "11110"),
    "G5_9": ("00111", "00111", "11011", "11101", "11110"),
    "K2xK5": ("0111110000", "1011101000", "1101100100", "1110100010", "1111000001", "1000001111", "0100010111", "0010011011", "0001011101", "0000111110"),
    "C4xC3": ("011100000100", "101010000010", "110001000001", "100011100000", "010101010000", "001110001000", "000100011100", "000010101010", "000001110001", "100000100011", "010000010101", "001000001110"),
    "G6_1": ("000001", "000001", "000001", "000001", "000001", "111110"),
    "G6_2": ("000001", "000001", "000001", "000011", "000101", "111110"),
    "G6_3": ("000001", "000001", "000010", "000010", "001101", "110010"),
    "G6_4": ("000001", "000001", "000011", "000011", "001100", "111100"),
    "G6_5": ("000001", "000001", "000011", "000011", "001101", "111110"),
    "G6_6": ("000001", "000001", "000110", "001010", "001101", "110010"),
    "G6_7": ("000001", "000001", "000110", "001011", "001101", "110110"),
    "G6_8": ("000001", "000001", "000111", "001011", "001100", "111110"),
    "G6_9": ("000001", "000010", "000011", "000011", "011100", "101100"),
    "G6_10": ("000001", "000010", "000011", "000011", "001101", "001110"),
    "G6_11": ("000001", "000010", "000111", "001011", "011100", "101100"),
    "G6_12": ("000001", "000010", "000111", "001011", "011101", "101110"),
    "G6_13": ("000001", "000011", "000101", "001001", "010001", "111110"),
    "G6_14": ("000001", "000110", "000110", "011001", "011001", "100110"),
    "G6_15": ("000001", "000110", "000110", "011011", "011101", "100110"),
    "G6_16": ("000001", "000111", "000111", "011001", "011001", "111110"),
    "G6_17": ("000001", "000111", "000111", "011010", "011100", "111000"),
    "G6_18": ("000001", "000111", "000111", "011011", "011101", "111110"),
    "G6_19": ("000001", "001110", "010110", "011011", "011101", "100110"),
    "G6_20": ("000001", "001111", "010111", "011011", "011101", "111110"),
    "G6_21": ("000011", "000011", "000011", "000011", "111100", "111100"),
    "G6_22": ("000011", "000011", "000011", "000011", "111101", "111110"),
    "G6_23": ("000011", "000011", "000101", "001001", "110000", "111100"),
    "G6_24": ("000011", "000011", "000101", "001001", "110001", "111110"),
    "G6_25": ("000011", "000011", "000101", "001001", "110000", "111100"),
    "G6_26": ("000011", "000011", "000101", "001010", "110101", "111010"),
    "G6_27": ("000011", "000011", "000111", "001011", "111100", "111100"),
    "G6_28": ("000011", "000011", "000111", "001011", "111101", "111110"),
    "G6_29": ("000011", "000111", "000111", "011000", "111000", "111000"),
    "G6_30": ("000011", "000111", "000111", "011000", "111001", "111010"),
    "G6_31": ("000011", "000111", "000111", "011011", "111100", "111100"),
    "G6_32": ("000011", "000111", "000111", "011011", "111101", "111110"),
    "G6_33": ("000011", "001100", "010100", "011001", "100001", "100110"),
    "G6_34": ("000011", "001100", "010100", "011011", "100101", "100110"),
    "G6_35": ("000011", "001100", "010111", "011011", "101101", "101110"),
    "G6_36": ("000011", "001101", "010101", "011001", "100001", "111110"),
    "G6_37": ("000011", "001101", "010101", "011010", "100100", "111000"),
    "G6_38": ("000011", "001101", "010101", "011011", "100100", "111100"),
    "G6_39": ("000011", "001111", "010111", "011011", "111100", "111100"),
    "G6_40": ("000011", "001111", "010111", "011011", "111101", "111110"),
    "G6_41": ("000111", "000111", "000111", "111000", "111000", "111000"),
    "G6_42": ("000111", "000111", "000111", "111000", "111001", "111010"),
    "G6_43": ("000111", "000111", "000111", "111001", "111001", "111110"),
    "G6_44": ("000111", "000111", "000111", "111011", "111101", "111110"),
    "G6_45": ("000111", "001011", "010011", "100011", "111100", "111100"),
    "G6_46": ("000111", "001011", "010011", "100011", "111101", "111110"),
    "G6_47": ("000111", "001011", "010111", "101011", "111100", "111100"),
    "G6_48": ("000111", "001011", "010111", "101011", "111101", "111110"),
    "G6_49": ("000111", "001111", "010111", "111000", "111001", "111010"),
    "G6_50": ("000111", "001111", "010111", "111001", "111001", "111110"),
    "G6_51": ("000111", "001111", "010111", "111011", "111101", "111110"),
    "G6_52": ("001111", "001111", "110011", "110011", "111100", "111100"),
    "G6_53": ("001111", "001111", "110011", "110011", "111101", "111110"),
    "G6_54": ("001111", "001111", "110111", "111011", "111101", "111110"),
}

PRINTED_ANNOTATION = {
    "G6_1": 'twins',
    "G6_2": 'twins',
    "G6_3": 'twins',
    "G6_4": 'twins',
    "G6_5": 'twins',
    "G6_6": 'twins',
    "G6_7": 'twins',
    "G6_8": 'twins',
    "G6_9": 'twins',
    "G6_10": 'twins',
    "G6_11": -1,
    "G6_12": -1,
    "G6_13": -1,
    "G6_14": 'twins',
    "G6_15": 'twins',
    "G6_16": 'twins',
    "G6_17": 'twins',
    "G6_18": 'twins',
    "G6_19": 3,
    "G6_20": 3,
    "G6_21": 'twins',
    "G6_22": 'twins',
    "G6_23": 'twins',
    "G6_24": 'twins',
    "G6_25": 'twins',
    "G6_26": 'twins',
    "G6_27": 'twins',
    "G6_28": 'twins',
    "G6_29": 'twins',
    "G6_30": 'twins',
    "G6_31": 'twins',
    "G6_32": 'twins',
    "G6_33": 3,
    "G6_34": 4,
    "G6_35": 4,
    "G6_36": 7,
    "G6_37": -5,
    "G6_38": 0,
    "G6_39": 'twins',
    "G6_40": 4,
    "G6_41": 'twins',
    "G6_42": 'twins',
    "G6_43": 'twins',
    "G6_44": 'twins',
    "G6_45": 'twins',
    "G6_46": 7,
    "G6_47": 'twins',
    "G6_48": 3,
    "G6_49": -1,
    "G6_50": 'twins',
    "G6_51": 3,
    "G6_52": 'twins',
    "G6_53": 'twins',
    "G6_54": 'twins',
}
